#pragma once

#include <vector>

#include "facetideal/bigint.hpp"

namespace facetideal {

/// Nonzero diagonal of the Smith normal form: positive invariant factors
/// d_1 | d_2 | ... ; rank is their count.
struct SmithResult {
    int rank = 0;
    std::vector<BigInt> invariant_factors;
};

/// Reduces the matrix in place by elementary row/column operations over Z.
SmithResult smith_normal_form(std::vector<std::vector<BigInt>> m);

} // namespace facetideal
