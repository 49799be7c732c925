#pragma once

#include <cstdint>

#include "facetideal/complex.hpp"

namespace facetideal {

/// Seeded random-complex generation for the property harness.  The same
/// config always yields the same complex; every mode's advertised property is
/// verified after generation, retrying on the rare failures.
struct GeneratorConfig {
    std::uint64_t seed = 0;
    int vertices = 8; // upper bound on the universe size
    int facets = 5;   // upper bound on the facet count
    enum class Mode { Random, RandomTree, RandomGrafted } mode = Mode::Random;
};

Complex generate(const GeneratorConfig& config);

} // namespace facetideal
