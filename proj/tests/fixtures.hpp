#pragma once

// The worked complexes used across the test suites.

#include "facetideal/complex.hpp"

namespace fixtures {

using facetideal::Complex;

// <xyu, xyz, xzv>: a tree with leaves {x,y,u} and {x,z,v}, not unmixed.
inline Complex example1() {
    return Complex::from_labels({"x", "y", "z", "u", "v"},
                                {{"x", "y", "u"}, {"x", "y", "z"}, {"x", "z", "v"}});
}

// The graph of (xy, xz) in k[x,y,z].
inline Complex example2() {
    return Complex::from_labels({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}});
}

// <xyz, yzu, uv>: an unmixed grafted tree.
inline Complex example11() {
    return Complex::from_labels({"x", "y", "z", "u", "v"},
                                {{"x", "y", "z"}, {"y", "z", "u"}, {"u", "v"}});
}

// <abc, acd, bcde>: no leaves at all.
inline Complex good_example() {
    return Complex::from_labels({"a", "b", "c", "d", "e"},
                                {{"a", "b", "c"}, {"a", "c", "d"}, {"b", "c", "d", "e"}});
}

// <xyu, xvz, yzw, xyz>: all of the first three are leaves, but removing
// {x,y,z} leaves a leafless triple, so not a tree.
inline Complex bad4() {
    return Complex::from_labels(
        {"x", "y", "u", "v", "z", "w"},
        {{"x", "y", "u"}, {"x", "v", "z"}, {"y", "z", "w"}, {"x", "y", "z"}});
}

// Facet complex of (xu, uvew, zvew, efw, efg, fgy): an unmixed tree whose
// facet {e,f,w} is neither a leaf nor a joint.
inline Complex not_leaf_or_joint() {
    return Complex::from_labels({"x", "u", "v", "e", "w", "z", "f", "g", "y"},
                                {{"x", "u"},
                                 {"u", "v", "e", "w"},
                                 {"z", "v", "e", "w"},
                                 {"e", "f", "w"},
                                 {"e", "f", "g"},
                                 {"f", "g", "y"}});
}

// The whiskered edge <xy, xx', yy'>.
inline Complex whiskered_edge() {
    return Complex::from_labels({"x", "y", "x'", "y'"},
                                {{"x", "y"}, {"x", "x'"}, {"y", "y'"}});
}

} // namespace fixtures
