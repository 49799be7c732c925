#pragma once

#include <vector>

#include "facetideal/bigint.hpp"
#include "facetideal/vertex_set.hpp"

namespace facetideal {

/// Reduced integer homology of a nonvoid simplicial complex, computed from
/// Smith normal forms of the boundary matrices of the augmented chain
/// complex.  Degrees run from -1 (the empty face) to dim.
struct HomologyGroups {
    int dim = -1;
    /// betti[d + 1] = free rank of reduced H_d.
    std::vector<int> betti;
    /// torsion[d + 1] = invariant factors > 1 of reduced H_d.
    std::vector<std::vector<BigInt>> torsion;

    int betti_at(int degree) const;
    const std::vector<BigInt>& torsion_at(int degree) const;

    /// dim_k of reduced H_d over a field of the given characteristic
    /// (0 or a prime), via universal coefficients.
    int dim_over(int degree, int characteristic) const;
};

/// `faces` must list every nonempty face of the complex (any order); the
/// empty face is implicit.  An empty list means the complex whose only face
/// is empty, with reduced H_{-1} = Z.
HomologyGroups reduced_homology(const std::vector<VertexSet>& faces);

/// Downward closure of a facet list: all nonempty faces, (size, lex) order.
std::vector<VertexSet> all_faces(const std::vector<VertexSet>& facets);

} // namespace facetideal
