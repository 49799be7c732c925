#pragma once

#include <vector>

#include "facetideal/complex.hpp"

namespace facetideal {

/// Square-free monomial ideal, each generator stored as its support set.
/// Generators form a minimal generating set (pairwise incomparable); inputs
/// that are not minimal are reduced and flagged.
struct MonomialIdeal {
    VertexUniverse universe;
    std::vector<VertexSet> generators; // (size, lex) order
    bool was_minimized = false;

    MonomialIdeal() = default;
    MonomialIdeal(VertexUniverse u, std::vector<VertexSet> gens);

    std::vector<std::vector<std::string>> generator_labels() const;
};

/// Minimal primes (= minimal vertex covers), height and Krull dimension of
/// the quotient by the facet ideal.
struct DecompositionReport {
    VertexUniverse universe;
    std::vector<VertexSet> primes;
    int krull_dim = 0;
    int height = 0;
};

/// The generator <-> facet bijection.
MonomialIdeal facet_ideal(const Complex& c);
Complex facet_complex(const MonomialIdeal& ideal);

/// Minimal non-faces of the complex, found by ascending-cardinality search.
MonomialIdeal nonface_ideal(const Complex& c);

/// Stanley-Reisner complex of the ideal: facets are the maximal subsets of the
/// universe containing no generator support.  Computed directly from that
/// definition (the cover-complement description is cross-checked in tests).
Complex nonface_complex(const MonomialIdeal& ideal);

DecompositionReport decompose(const Complex& c);

/// Brute-force check that the facet ideal equals the intersection of its
/// cover-generated primes, over every square-free monomial of the universe.
/// Throws UniverseTooLarge beyond `max_vertices`.
bool verify_intersection(const Complex& c, int max_vertices = 20);

} // namespace facetideal
