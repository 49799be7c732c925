#include "doctest.h"

#include <algorithm>

#include "facetideal/covers.hpp"
#include "facetideal/errors.hpp"
#include "facetideal/generate.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace facetideal;

namespace {

std::vector<std::vector<std::string>> cover_labels(const CoverReport& r) {
    std::vector<std::vector<std::string>> out;
    for (VertexSet c : r.covers)
        out.push_back(r.universe.labels_of(c));
    return out;
}

} // namespace

TEST_CASE("is_vertex_cover") {
    Complex g = fixtures::example2();
    CHECK(is_vertex_cover(g, {"x"}));
    CHECK(is_vertex_cover(g, {"x", "y", "z"}));
    CHECK_FALSE(is_vertex_cover(Complex::from_facet_labels({{"x", "y"}, {"u", "v"}}), {"x"}));
    CHECK_THROWS_WITH_AS(is_vertex_cover(g, {"nope"}), doctest::Contains("UnknownVertex"), Error);
}

TEST_CASE("minimal vertex covers of the worked examples") {
    SUBCASE("example11 has exactly the five size-2 covers") {
        CoverReport r = minimal_vertex_covers(fixtures::example11());
        CHECK(cover_labels(r) == std::vector<std::vector<std::string>>{
                                     {"x", "u"}, {"y", "u"}, {"y", "v"}, {"z", "u"}, {"z", "v"}});
        CHECK(r.alpha == 2);
        CHECK(r.unmixed);
    }
    SUBCASE("example2 is mixed") {
        CoverReport r = minimal_vertex_covers(fixtures::example2());
        CHECK(cover_labels(r) ==
              std::vector<std::vector<std::string>>{{"x"}, {"y", "z"}});
        CHECK(r.alpha == 1);
        CHECK_FALSE(r.unmixed);
    }
    SUBCASE("single facet") {
        CoverReport r = minimal_vertex_covers(Complex::from_facet_labels({{"a", "b"}}));
        CHECK(cover_labels(r) == std::vector<std::vector<std::string>>{{"a"}, {"b"}});
        CHECK(r.alpha == 1);
        CHECK(r.unmixed);
    }
    CHECK_THROWS_WITH_AS(minimal_vertex_covers(Complex{}), doctest::Contains("EmptyComplex"), Error);
}

TEST_CASE("independence of the worked examples") {
    CHECK(independence(fixtures::example11()).beta == 2);
    CHECK(independence(fixtures::example2()).beta == 1);
    IndependenceReport r =
        independence(Complex::from_facet_labels({{"a", "b"}, {"c", "d"}, {"e", "f"}}));
    CHECK(r.beta == 3);
    CHECK(r.witnesses == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("cover enumeration matches the brute-force oracle") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.vertices = 8;
        cfg.facets = 6;
        Complex c = generate(cfg);
        CoverReport fast = minimal_vertex_covers(c);
        CHECK(fast.covers == oracles::brute_minimal_covers(c));
        CHECK(independence(c).beta == oracles::brute_beta(c));
        // alpha >= beta: each independent facet needs its own cover vertex.
        CHECK(fast.alpha >= independence(c).beta);
    }
}

TEST_CASE("maximal independent sets cover every vertex when alpha = beta and unmixed") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 400 && checked < 60; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.vertices = 7;
        cfg.facets = 6;
        Complex c = generate(cfg);
        CoverReport covers = minimal_vertex_covers(c);
        IndependenceReport indep = independence(c);
        if (!covers.unmixed || covers.alpha != indep.beta)
            continue;
        ++checked;
        for (const auto& witness : indep.witnesses) {
            VertexSet covered;
            for (int i : witness)
                covered = covered | c.facet(i);
            CHECK(covered == c.support());
        }
    }
    CHECK(checked > 0);
}
