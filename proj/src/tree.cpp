#include "facetideal/tree.hpp"

#include <algorithm>
#include <bit>

#include "facetideal/errors.hpp"

namespace facetideal {

namespace {

std::vector<int> mask_members(FacetMask m) {
    std::vector<int> out;
    for (FacetMask b = m; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

bool dominates(const std::vector<VertexSet>& facets, FacetMask others, int f, int g) {
    VertexSet fg = facets[static_cast<std::size_t>(f)] & facets[static_cast<std::size_t>(g)];
    for (int h : mask_members(others)) {
        VertexSet fh = facets[static_cast<std::size_t>(f)] & facets[static_cast<std::size_t>(h)];
        if (!fh.subset_of(fg))
            return false;
    }
    return true;
}

} // namespace

bool facet_is_leaf(const std::vector<VertexSet>& facets, FacetMask subset, int facet_idx) {
    FacetMask others = subset & ~(FacetMask{1} << facet_idx);
    if (others == 0)
        return true; // the only facet
    for (int g : mask_members(others))
        if (dominates(facets, others, facet_idx, g))
            return true;
    return false;
}

bool subcollection_has_leaf(const std::vector<VertexSet>& facets, FacetMask subset) {
    for (int i : mask_members(subset))
        if (facet_is_leaf(facets, subset, i))
            return true;
    return false;
}

LeafReport leaf_report(const Complex& c, VertexSet facet) {
    int idx = c.facet_index(facet);
    if (idx < 0)
        throw Error("NotAFacet", "the given set is not a facet of the complex");

    LeafReport report;
    report.facet = facet;

    int q = c.facet_count();
    FacetMask all = static_cast<FacetMask>((std::uint64_t{1} << q) - 1);
    FacetMask others = all & ~(FacetMask{1} << idx);

    report.free_vertices = facet;
    for (int j = 0; j < q; ++j)
        if (j != idx)
            report.free_vertices = report.free_vertices.minus(c.facet(j));

    if (others == 0) {
        report.is_leaf = true; // sole facet; universal set stays empty
        return report;
    }
    for (int g : mask_members(others))
        if (dominates(c.facets(), others, idx, g)) {
            report.universal_set.push_back(c.facet(g));
            if (c.facet(g).intersects(facet))
                report.joints.push_back(c.facet(g));
        }
    report.is_leaf = !report.universal_set.empty();
    return report;
}

LeafReport leaf_report(const Complex& c, const std::vector<std::string>& facet_labels) {
    return leaf_report(c, c.universe().set_of(facet_labels));
}

std::vector<VertexSet> leaves(const Complex& c) {
    if (c.empty())
        throw Error("EmptyComplex", "the empty complex has no leaves");
    std::vector<VertexSet> out;
    FacetMask all = static_cast<FacetMask>((std::uint64_t{1} << c.facet_count()) - 1);
    for (int i = 0; i < c.facet_count(); ++i)
        if (facet_is_leaf(c.facets(), all, i))
            out.push_back(c.facet(i));
    return out;
}

std::vector<VertexSet> all_joints(const Complex& c) {
    if (c.empty())
        throw Error("EmptyComplex", "the empty complex has no joints");
    std::vector<VertexSet> out;
    for (int i = 0; i < c.facet_count(); ++i) {
        LeafReport r = leaf_report(c, c.facet(i));
        if (!r.is_leaf)
            continue;
        for (VertexSet j : r.joints)
            if (std::find(out.begin(), out.end(), j) == out.end())
                out.push_back(j);
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

namespace {

bool mask_connected(const std::vector<VertexSet>& facets, FacetMask subset) {
    std::vector<int> idx = mask_members(subset);
    if (idx.size() <= 1)
        return true;
    FacetMask seen = FacetMask{1} << idx[0];
    std::vector<int> stack{idx[0]};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int j : idx)
            if (!(seen & (FacetMask{1} << j)) &&
                facets[static_cast<std::size_t>(cur)].intersects(
                    facets[static_cast<std::size_t>(j)])) {
                seen |= FacetMask{1} << j;
                stack.push_back(j);
            }
    }
    return seen == subset;
}

// Enumerates size-s index subsets of {0..q-1} in lex order and applies fn;
// returns false (and stops) when fn does.
template <typename Fn>
bool for_each_subset_of_size(int q, int s, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!fn(idx))
            return false;
        int i = s - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == q - s + i)
            --i;
        if (i < 0)
            return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

ForestCertificate is_forest(const Complex& c) {
    if (c.empty())
        throw Error("EmptyComplex", "forest recognition needs at least one facet");
    int q = c.facet_count();
    if (q > 20)
        throw Error("TooManyFacets",
                    "subcollection search is exponential; capped at 20 facets, got " +
                        std::to_string(q));

    // Subcollections of size 1 or 2 always have a leaf, and only connected
    // ones need checking.  Scanning in (size, lex) order makes the witness the
    // lexicographically least one of minimal cardinality.
    ForestCertificate cert;
    cert.verdict = true;
    for (int s = 3; s <= q && cert.verdict; ++s) {
        for_each_subset_of_size(q, s, [&](const std::vector<int>& idx) {
            FacetMask subset = 0;
            for (int i : idx)
                subset |= FacetMask{1} << i;
            if (!mask_connected(c.facets(), subset))
                return true;
            if (!subcollection_has_leaf(c.facets(), subset)) {
                cert.verdict = false;
                cert.witness = idx;
                return false;
            }
            return true;
        });
    }
    return cert;
}

ForestCertificate is_tree(const Complex& c) {
    ForestCertificate cert = is_forest(c);
    if (cert.verdict && !is_connected(c))
        cert.verdict = false; // disconnected: not a tree, but no leafless witness exists
    return cert;
}

} // namespace facetideal
