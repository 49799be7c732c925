#include "doctest.h"

#include <random>

#include "facetideal/homology.hpp"
#include "facetideal/smith.hpp"

using namespace facetideal;

namespace {

// All (n-1)-subsets of an n-vertex set: the boundary sphere S^(n-2).
std::vector<VertexSet> simplex_boundary(int n) {
    std::vector<VertexSet> facets;
    for (int v = 0; v < n; ++v)
        facets.push_back(VertexSet::full(n).without(v));
    return all_faces(facets);
}

} // namespace

TEST_CASE("smith normal form basics") {
    SUBCASE("diagonalizable example with torsion") {
        // [[2,0],[0,3]] ~ diag(1,6)
        std::vector<std::vector<BigInt>> m{{BigInt(2), BigInt(0)}, {BigInt(0), BigInt(3)}};
        SmithResult r = smith_normal_form(m);
        CHECK(r.rank == 2);
        CHECK(r.invariant_factors == std::vector<BigInt>{BigInt(1), BigInt(6)});
    }
    SUBCASE("rank-deficient matrix") {
        std::vector<std::vector<BigInt>> m{{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}};
        SmithResult r = smith_normal_form(m);
        CHECK(r.rank == 1);
        CHECK(r.invariant_factors == std::vector<BigInt>{BigInt(1)});
    }
    SUBCASE("divisibility chain") {
        std::vector<std::vector<BigInt>> m{{BigInt(2), BigInt(4), BigInt(4)},
                                           {BigInt(-6), BigInt(6), BigInt(12)},
                                           {BigInt(10), BigInt(4), BigInt(16)}};
        SmithResult r = smith_normal_form(m);
        REQUIRE(r.rank == 3);
        for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i)
            CHECK((r.invariant_factors[i + 1] % r.invariant_factors[i]).is_zero());
    }
}

TEST_CASE("sphere homology from simplex boundaries") {
    for (int n = 2; n <= 6; ++n) {
        HomologyGroups h = reduced_homology(simplex_boundary(n));
        CHECK(h.dim == n - 2);
        for (int d = -1; d <= h.dim; ++d) {
            CHECK(h.betti_at(d) == (d == n - 2 ? 1 : 0));
            CHECK(h.torsion_at(d).empty());
        }
    }
}

TEST_CASE("degenerate complexes") {
    SUBCASE("the empty-face-only complex has H_(-1) = Z") {
        HomologyGroups h = reduced_homology({});
        CHECK(h.dim == -1);
        CHECK(h.betti_at(-1) == 1);
    }
    SUBCASE("a point is acyclic") {
        HomologyGroups h = reduced_homology(all_faces({VertexSet{0b1}}));
        CHECK(h.betti_at(-1) == 0);
        CHECK(h.betti_at(0) == 0);
    }
    SUBCASE("two points have one extra component") {
        HomologyGroups h = reduced_homology(all_faces({VertexSet{0b01}, VertexSet{0b10}}));
        CHECK(h.betti_at(0) == 1);
    }
    SUBCASE("a full simplex is acyclic") {
        HomologyGroups h = reduced_homology(all_faces({VertexSet::full(4)}));
        for (int d = -1; d <= h.dim; ++d)
            CHECK(h.betti_at(d) == 0);
    }
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 6;
        std::size_t cols = 1 + rng() % 6;
        std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
        for (auto& row : m)
            for (auto& e : row)
                e = BigInt(static_cast<long long>(rng() % 21) - 10);
        SmithResult r = smith_normal_form(m);

        CHECK(r.rank <= static_cast<int>(std::min(rows, cols)));
        for (std::size_t i = 0; i + 1 < r.invariant_factors.size(); ++i)
            CHECK((r.invariant_factors[i + 1] % r.invariant_factors[i]).is_zero());
        for (const BigInt& f : r.invariant_factors)
            CHECK(f > BigInt(0));

        // d_1 equals the gcd of all entries.
        BigInt g(0);
        for (const auto& row : m)
            for (const auto& e : row)
                g = gcd(g, e);
        if (r.rank > 0)
            CHECK(r.invariant_factors[0] == g);
        else
            CHECK(g.is_zero());
    }
}

TEST_CASE("alternating face counts equal alternating betti numbers") {
    // Torsion cancels over the rationals, so the reduced Euler characteristic
    // can be read off either side.
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<VertexSet> facets;
        int q = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < q; ++i) {
            VertexSet f;
            while (f.empty())
                f = VertexSet(rng() & VertexSet::full(n).raw());
            facets.push_back(f);
        }
        std::vector<VertexSet> faces = all_faces(facets);
        HomologyGroups h = reduced_homology(faces);

        long long chi_faces = -1; // the empty face sits in degree -1
        for (VertexSet f : faces)
            chi_faces += (f.size() % 2 == 1) ? 1 : -1;
        long long chi_betti = 0;
        for (int d = -1; d <= h.dim; ++d)
            chi_betti += (d % 2 == 0 ? 1 : -1) * h.betti_at(d);
        CHECK(chi_faces == chi_betti);
    }
}

TEST_CASE("a cone is acyclic and suspension shifts the sphere") {
    // Coning every facet to a fresh apex kills all reduced homology.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<VertexSet> facets;
        for (int i = 0, q = 1 + static_cast<int>(rng() % 4); i < q; ++i) {
            VertexSet f;
            while (f.empty())
                f = VertexSet(rng() & VertexSet::full(n).raw());
            facets.push_back(f.with(n)); // apex = vertex n
        }
        HomologyGroups h = reduced_homology(all_faces(facets));
        for (int d = -1; d <= h.dim; ++d) {
            CHECK(h.betti_at(d) == 0);
            CHECK(h.torsion_at(d).empty());
        }
    }

    // Suspension of S^0: two new apexes over two points give a circle.
    std::vector<VertexSet> circle;
    for (int apex : {2, 3})
        for (int point : {0, 1})
            circle.push_back(VertexSet::single(apex).with(point));
    HomologyGroups h = reduced_homology(all_faces(circle));
    CHECK(h.dim == 1);
    CHECK(h.betti_at(0) == 0);
    CHECK(h.betti_at(1) == 1);
}

TEST_CASE("projective plane: 2-torsion and characteristic dependence") {
    // Minimal 6-vertex triangulation of RP^2.
    std::vector<std::vector<int>> tris = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5},
                                          {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                          {2, 4, 5}, {3, 4, 5}};
    std::vector<VertexSet> facets;
    for (const auto& t : tris) {
        VertexSet f;
        for (int v : t)
            f = f.with(v);
        facets.push_back(f);
    }
    HomologyGroups h = reduced_homology(all_faces(facets));
    CHECK(h.dim == 2);
    CHECK(h.betti_at(0) == 0);
    CHECK(h.betti_at(1) == 0);
    CHECK(h.betti_at(2) == 0);
    REQUIRE(h.torsion_at(1).size() == 1);
    CHECK(h.torsion_at(1)[0] == BigInt(2));
    // Over Q nothing survives; over F_2 both H_1 and H_2 light up.
    CHECK(h.dim_over(1, 0) == 0);
    CHECK(h.dim_over(1, 2) == 1);
    CHECK(h.dim_over(2, 2) == 1);
    CHECK(h.dim_over(1, 3) == 0);
}
