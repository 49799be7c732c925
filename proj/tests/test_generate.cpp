#include "doctest.h"

#include "facetideal/errors.hpp"
#include "facetideal/generate.hpp"
#include "facetideal/transform.hpp"
#include "facetideal/tree.hpp"

using namespace facetideal;

TEST_CASE("generation is deterministic in the seed") {
    for (auto mode : {GeneratorConfig::Mode::Random, GeneratorConfig::Mode::RandomTree,
                      GeneratorConfig::Mode::RandomGrafted}) {
        GeneratorConfig cfg;
        cfg.seed = 42;
        cfg.vertices = 8;
        cfg.facets = 5;
        cfg.mode = mode;
        CHECK(generate(cfg) == generate(cfg));
    }
}

TEST_CASE("modes deliver their advertised structure") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.vertices = 8;
        cfg.facets = 6;

        cfg.mode = GeneratorConfig::Mode::RandomTree;
        CHECK(is_tree(generate(cfg)).verdict);

        cfg.mode = GeneratorConfig::Mode::RandomGrafted;
        CHECK(is_grafted(generate(cfg)).has_value());

        cfg.mode = GeneratorConfig::Mode::Random;
        Complex c = generate(cfg);
        CHECK_FALSE(c.empty());
        CHECK(c.vertex_count() <= 8);
        CHECK(c.facet_count() <= 6);
    }
}

TEST_CASE("bounds are enforced") {
    GeneratorConfig cfg;
    cfg.vertices = 60;
    CHECK_THROWS_WITH_AS(generate(cfg), doctest::Contains("BoundsTooLarge"), Error);
}
