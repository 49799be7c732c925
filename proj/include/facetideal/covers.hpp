#pragma once

#include <vector>

#include "facetideal/complex.hpp"

namespace facetideal {

/// Complete minimal-vertex-cover analysis: every minimal transversal of the
/// facet hypergraph, the covering number alpha, and unmixedness.
struct CoverReport {
    VertexUniverse universe;
    std::vector<VertexSet> covers; // all minimal covers, (size, lex) order
    int alpha = 0;
    bool unmixed = false;
};

/// Facet-disjointness analysis: the independence number beta, every maximum
/// independent set (witnesses) and every maximal one.
struct IndependenceReport {
    int beta = 0;
    std::vector<std::vector<int>> witnesses;    // facet-index sets of size beta
    std::vector<std::vector<int>> maximal_sets; // all maximal independent sets
};

/// True iff the candidate meets every facet.
bool is_vertex_cover(const Complex& c, VertexSet candidate);
bool is_vertex_cover(const Complex& c, const std::vector<std::string>& labels);

/// Branch-and-bound enumeration of all minimal covers; throws EmptyComplex.
CoverReport minimal_vertex_covers(const Complex& c);

/// Convenience: alpha only.
int covering_number(const Complex& c);

IndependenceReport independence(const Complex& c);

/// Enumeration core on bare facet lists, used by modules that work on
/// subcollections without rebuilding a Complex.
std::vector<VertexSet> minimal_covers_of(const std::vector<VertexSet>& facets);

} // namespace facetideal
