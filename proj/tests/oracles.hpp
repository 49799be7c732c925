#pragma once

// Brute-force reference implementations, kept independent of the library's
// search strategies so property tests can cross-validate them.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "facetideal/complex.hpp"

namespace oracles {

using facetideal::Complex;
using facetideal::VertexSet;

// Every minimal cover by scanning all 2^n vertex subsets.
inline std::vector<VertexSet> brute_minimal_covers(const Complex& c) {
    int n = c.vertex_count();
    std::vector<VertexSet> covers;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s(bits);
        bool is_cover = true;
        for (VertexSet f : c.facets())
            if (!f.intersects(s)) {
                is_cover = false;
                break;
            }
        if (is_cover)
            covers.push_back(s);
    }
    std::vector<VertexSet> minimal;
    for (VertexSet s : covers) {
        bool has_smaller = false;
        for (VertexSet t : covers)
            if (t != s && t.subset_of(s)) {
                has_smaller = true;
                break;
            }
        if (!has_smaller)
            minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(), facetideal::size_lex_less);
    return minimal;
}

// Independence number by scanning all facet subsets.
inline int brute_beta(const Complex& c) {
    int q = c.facet_count();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << q); ++mask) {
        VertexSet used;
        bool ok = true;
        for (int i = 0; i < q && ok; ++i)
            if (mask & (std::uint32_t{1} << i)) {
                if (c.facet(i).intersects(used))
                    ok = false;
                used = used | c.facet(i);
            }
        if (ok)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

// Leaf existence straight from the definition, written independently of the
// library's version.
inline bool brute_has_leaf(const Complex& c, std::uint32_t mask) {
    std::vector<int> idx;
    for (int i = 0; i < c.facet_count(); ++i)
        if (mask & (std::uint32_t{1} << i))
            idx.push_back(i);
    for (int i : idx) {
        if (idx.size() == 1)
            return true;
        for (int g : idx) {
            if (g == i)
                continue;
            bool dominates = true;
            for (int f : idx) {
                if (f == i || f == g)
                    continue;
                VertexSet a = c.facet(i) & c.facet(f);
                VertexSet b = c.facet(i) & c.facet(g);
                if (!a.subset_of(b)) {
                    dominates = false;
                    break;
                }
            }
            if (dominates)
                return true;
        }
    }
    return false;
}

// The unrestricted form of the forest definition: every nonempty
// subcollection, connected or not, must have a leaf.
inline bool brute_is_forest_all_subcollections(const Complex& c) {
    int q = c.facet_count();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << q); ++mask)
        if (!brute_has_leaf(c, mask))
            return false;
    return true;
}

} // namespace oracles
