#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "facetideal/complex.hpp"

namespace facetideal {

/// Leaf analysis of a single facet F: the universal set U(F) of facets whose
/// intersection with F dominates every other intersection, the joints (members
/// of U(F) actually meeting F), and the free vertices of F.
struct LeafReport {
    VertexSet facet;
    bool is_leaf = false;
    std::vector<VertexSet> universal_set;
    std::vector<VertexSet> joints;
    VertexSet free_vertices;
};

/// Forest/tree verdict with a re-checkable certificate: on failure caused by a
/// leafless subcollection, `witness` holds its facet indices (the first such
/// subcollection in (size, lex) search order, so it has minimal cardinality).
/// A tree verdict can also fail on disconnectedness alone, in which case no
/// leafless witness exists and `witness` stays empty.
struct ForestCertificate {
    bool verdict = false;
    std::optional<std::vector<int>> witness;
};

using FacetMask = std::uint32_t;

/// Leaf test within the subcollection selected by `subset` (bit i = facet i).
bool facet_is_leaf(const std::vector<VertexSet>& facets, FacetMask subset, int facet_idx);

/// True iff some facet of the subcollection is a leaf of it.
bool subcollection_has_leaf(const std::vector<VertexSet>& facets, FacetMask subset);

LeafReport leaf_report(const Complex& c, VertexSet facet);
LeafReport leaf_report(const Complex& c, const std::vector<std::string>& facet_labels);

/// All facets that are leaves, in canonical facet order.
std::vector<VertexSet> leaves(const Complex& c);

/// All joints of the complex: facets that are joints of some leaf.
std::vector<VertexSet> all_joints(const Complex& c);

/// Every nonempty connected subcollection must have a leaf.  Exponential in
/// the facet count; capped at 20 facets (TooManyFacets).
ForestCertificate is_forest(const Complex& c);

/// Forest plus connectedness.
ForestCertificate is_tree(const Complex& c);

} // namespace facetideal
