#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facetideal/complex.hpp"
#include "facetideal/homology.hpp"
#include "facetideal/ideal.hpp"
#include "facetideal/transform.hpp"

namespace facetideal {

/// Homology of the link of one face of the Stanley-Reisner complex.
struct LinkRecord {
    VertexSet face;
    int link_dim = -1;
    std::vector<int> reduced_betti;        // from degree -1 upward
    std::vector<long long> torsion_primes; // distinct primes across all degrees
    HomologyGroups groups;
};

/// Reisner-criterion verdict: the quotient by the facet ideal is
/// Cohen-Macaulay over k iff every link of the Stanley-Reisner complex has
/// vanishing reduced homology below its dimension.
struct HomologyReport {
    VertexUniverse universe;
    int characteristic = 0;
    bool cm = false;
    bool cm_over_rationals = false;
    std::optional<std::pair<VertexSet, int>> obstruction; // (face, degree)
    std::vector<LinkRecord> links;
};

/// The tree criterion: a tree is Cohen-Macaulay iff it is unmixed.
/// Throws NotATree when the input is not a tree.
bool cm_tree(const Complex& c);

/// Independent oracle via link homology; characteristic is 0 or a prime.
/// Throws UniverseTooLarge beyond `max_vertices`.
HomologyReport cm_reisner(const Complex& c, int characteristic = 0, int jobs = 1,
                          int max_vertices = 16);

/// Monomial ideal with exponents, used by the artinian reduction and
/// polarization; generators are exponent vectors aligned with `variables`.
struct ExponentIdeal {
    std::vector<std::string> variables;
    std::vector<std::vector<int>> generators;
};

/// A degree-one form `fresh - original` identified during polarization.
struct LinearForm {
    std::string fresh;
    std::string original;
};

/// The artinian quotient attached to a grafting: one variable y_i per leaf
/// (its designated free vertex), pure powers y_i^(|F_i|), the deck monomials
/// rewritten in the y's, and the ordered linear sequence that polarizes the
/// quotient back to the facet ideal.
struct ArtinianReduction {
    std::vector<int> leaf_free_vertex;                // y_i as universe indices
    std::vector<int> power_exponents;                 // u_i + 1 = |F_i|
    std::vector<std::vector<int>> deck_monomials;     // E_j over the r leaf variables
    std::vector<std::pair<int, int>> linear_sequence; // (y_i, x^i_k) universe indices
    ExponentIdeal s_ideal;
};

/// Throws NotGrafted when the decomposition does not fit the complex, and
/// ChainViolation if the embedded-intersection chain of some leaf fails
/// (impossible for decompositions produced by is_grafted).
ArtinianReduction artinian_reduction(const Complex& c, const GraftingDecomposition& d);

struct PolarizationResult {
    MonomialIdeal ideal; // square-free
    std::vector<LinearForm> sequence;
};

/// Standard polarization: the extra powers of each variable split into fresh
/// primed copies, one variable at a time.
PolarizationResult polarize(const ExponentIdeal& ideal);

/// Applies the splitting steps in linear-sequence order to the artinian
/// quotient and checks the result equals the facet ideal generator-for-
/// generator.  Throws NotGrafted.
bool verify_polarization_roundtrip(const Complex& c);

} // namespace facetideal
