#include "facetideal/cm.hpp"

#include <algorithm>
#include <thread>

#include "facetideal/covers.hpp"
#include "facetideal/errors.hpp"
#include "facetideal/tree.hpp"

namespace facetideal {

bool cm_tree(const Complex& c) {
    if (!is_tree(c).verdict)
        throw Error("NotATree", "the tree criterion only applies to trees");
    return minimal_vertex_covers(c).unmixed;
}

namespace {

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::vector<long long> prime_factors(BigInt value) {
    std::vector<long long> out;
    auto strip = [&](long long p) {
        BigInt bp(p);
        bool hit = false;
        while ((value % bp).is_zero()) {
            value = value / bp;
            hit = true;
        }
        if (hit)
            out.push_back(p);
    };
    strip(2);
    for (long long d = 3; BigInt(d) * BigInt(d) <= value; d += 2)
        strip(d);
    if (value > BigInt(1)) {
        if (!value.fits_long_long())
            throw Error("TorsionOverflow", "torsion coefficient exceeds 64 bits");
        out.push_back(value.to_long_long());
    }
    return out;
}

LinkRecord analyze_link(VertexSet sigma, int n, const std::vector<char>& face_flag) {
    LinkRecord rec;
    rec.face = sigma;

    // Link faces: tau over the complement with sigma | tau a face.
    std::vector<VertexSet> link_faces;
    std::uint64_t comp = VertexSet::full(n).minus(sigma).raw();
    for (std::uint64_t t = comp;; t = (t - 1) & comp) {
        if (t != 0 && face_flag[sigma.raw() | t])
            link_faces.push_back(VertexSet(t));
        if (t == 0)
            break;
    }

    rec.groups = reduced_homology(link_faces);
    rec.link_dim = rec.groups.dim;
    rec.reduced_betti = rec.groups.betti;
    for (const auto& degree_torsion : rec.groups.torsion)
        for (const BigInt& t : degree_torsion)
            for (long long p : prime_factors(t))
                if (std::find(rec.torsion_primes.begin(), rec.torsion_primes.end(), p) ==
                    rec.torsion_primes.end())
                    rec.torsion_primes.push_back(p);
    std::sort(rec.torsion_primes.begin(), rec.torsion_primes.end());
    return rec;
}

bool link_vanishes(const LinkRecord& rec, int characteristic) {
    for (int d = -1; d < rec.link_dim; ++d)
        if (rec.groups.dim_over(d, characteristic) != 0)
            return false;
    return true;
}

int first_obstruction_degree(const LinkRecord& rec, int characteristic) {
    for (int d = -1; d < rec.link_dim; ++d)
        if (rec.groups.dim_over(d, characteristic) != 0)
            return d;
    return rec.link_dim;
}

} // namespace

HomologyReport cm_reisner(const Complex& c, int characteristic, int jobs, int max_vertices) {
    if (c.empty())
        throw Error("EmptyComplex", "Cohen-Macaulayness of the empty complex is undefined");
    if (characteristic != 0 && !is_prime(characteristic))
        throw Error("InvalidCharacteristic", "characteristic must be 0 or a prime");
    int n = c.vertex_count();
    if (n > max_vertices)
        throw Error("UniverseTooLarge", "link homology is exponential; capped at " +
                                            std::to_string(max_vertices) + " vertices");

    HomologyReport report;
    report.universe = c.universe();
    report.characteristic = characteristic;

    // Faces of the Stanley-Reisner complex of F(Delta): subsets containing no
    // facet of Delta.
    std::vector<char> face_flag(std::size_t{1} << n, 1);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        for (VertexSet f : c.facets())
            if (f.subset_of(VertexSet(s))) {
                face_flag[s] = 0;
                break;
            }
    std::vector<VertexSet> faces;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if (face_flag[s])
            faces.push_back(VertexSet(s));
    std::sort(faces.begin(), faces.end(), size_lex_less);

    report.links.resize(faces.size());
    int workers = std::max(1, jobs);
    if (workers == 1 || faces.size() < 2) {
        for (std::size_t i = 0; i < faces.size(); ++i)
            report.links[i] = analyze_link(faces[i], n, face_flag);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (faces.size() + static_cast<std::size_t>(workers) - 1) /
                            static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = static_cast<std::size_t>(w) * chunk;
            std::size_t hi = std::min(faces.size(), lo + chunk);
            if (lo >= hi)
                break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    report.links[i] = analyze_link(faces[i], n, face_flag);
            });
        }
        for (auto& t : pool)
            t.join();
    }

    report.cm = true;
    report.cm_over_rationals = true;
    for (const LinkRecord& rec : report.links) {
        if (report.cm && !link_vanishes(rec, characteristic)) {
            report.cm = false;
            report.obstruction = {rec.face, first_obstruction_degree(rec, characteristic)};
        }
        if (report.cm_over_rationals && !link_vanishes(rec, 0))
            report.cm_over_rationals = false;
    }
    return report;
}

ArtinianReduction artinian_reduction(const Complex& c, const GraftingDecomposition& d) {
    // Structural validation: the decomposition must be the leaf/deck split of
    // this complex with disjoint leaves covering every vertex in use.
    std::vector<VertexSet> actual_leaves = leaves(c);
    std::vector<VertexSet> expected_deck;
    for (VertexSet f : c.facets())
        if (std::find(actual_leaves.begin(), actual_leaves.end(), f) == actual_leaves.end())
            expected_deck.push_back(f);
    if (d.leaves != actual_leaves || d.deck != expected_deck ||
        d.r != static_cast<int>(d.leaves.size()) || d.s != static_cast<int>(d.deck.size()))
        throw Error("NotGrafted", "decomposition does not match the complex");
    VertexSet leaf_union;
    for (VertexSet f : d.leaves) {
        if (leaf_union.intersects(f))
            throw Error("NotGrafted", "leaves are not pairwise disjoint");
        leaf_union = leaf_union | f;
    }
    for (VertexSet g : d.deck)
        if (!g.subset_of(leaf_union))
            throw Error("NotGrafted", "deck facet outside the leaf vertices");

    ArtinianReduction ar;
    int r = d.r;

    for (int i = 0; i < r; ++i) {
        VertexSet leaf = d.leaves[static_cast<std::size_t>(i)];
        VertexSet free = leaf;
        for (VertexSet f : c.facets())
            if (f != leaf)
                free = free.minus(f);
        if (free.empty())
            throw Error("NotGrafted", "a leaf has no free vertex");
        int y = free.lowest();
        ar.leaf_free_vertex.push_back(y);
        ar.power_exponents.push_back(leaf.size());

        // Embedded chain of the intersections with this leaf, smallest first.
        std::vector<VertexSet> traces;
        for (VertexSet f : c.facets())
            if (f != leaf && f.intersects(leaf))
                traces.push_back(f & leaf);
        std::sort(traces.begin(), traces.end(), size_lex_less);
        for (std::size_t k = 0; k + 1 < traces.size(); ++k)
            if (!traces[k].subset_of(traces[k + 1]))
                throw Error("ChainViolation",
                            "intersections with a leaf do not form a chain");

        // Substitution order: vertices of the smallest trace first, free
        // spares last, ties by vertex index.
        std::vector<int> rest = leaf.without(y).members();
        auto chain_key = [&](int v) {
            for (std::size_t k = 0; k < traces.size(); ++k)
                if (traces[k].contains(v))
                    return static_cast<int>(k);
            return static_cast<int>(traces.size());
        };
        std::stable_sort(rest.begin(), rest.end(),
                         [&](int a, int b) { return chain_key(a) < chain_key(b); });
        for (int x : rest)
            ar.linear_sequence.emplace_back(y, x);
    }

    for (VertexSet g : d.deck) {
        std::vector<int> exps(static_cast<std::size_t>(r), 0);
        for (int i = 0; i < r; ++i)
            exps[static_cast<std::size_t>(i)] = (g & d.leaves[static_cast<std::size_t>(i)]).size();
        ar.deck_monomials.push_back(std::move(exps));
    }

    for (int y : ar.leaf_free_vertex)
        ar.s_ideal.variables.push_back(c.universe().name(y));
    for (int i = 0; i < r; ++i) {
        std::vector<int> pure(static_cast<std::size_t>(r), 0);
        pure[static_cast<std::size_t>(i)] = ar.power_exponents[static_cast<std::size_t>(i)];
        ar.s_ideal.generators.push_back(std::move(pure));
    }
    for (const auto& e : ar.deck_monomials)
        ar.s_ideal.generators.push_back(e);
    return ar;
}

namespace {

std::string unique_label(std::string base, const std::vector<std::string>& taken) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end())
        base += "'";
    return base;
}

} // namespace

PolarizationResult polarize(const ExponentIdeal& ideal) {
    int n = static_cast<int>(ideal.variables.size());
    std::vector<int> max_exp(static_cast<std::size_t>(n), 0);
    for (const auto& g : ideal.generators)
        for (int v = 0; v < n; ++v)
            max_exp[static_cast<std::size_t>(v)] =
                std::max(max_exp[static_cast<std::size_t>(v)], g[static_cast<std::size_t>(v)]);

    PolarizationResult result;
    std::vector<std::string> names = ideal.variables;
    // copies[v] = indices of the fresh variables splitting the extra powers
    // of v, in split order.
    std::vector<std::vector<int>> copies(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int k = 1; k < max_exp[static_cast<std::size_t>(v)]; ++k) {
            std::string fresh =
                unique_label(ideal.variables[static_cast<std::size_t>(v)] + "'", names);
            copies[static_cast<std::size_t>(v)].push_back(static_cast<int>(names.size()));
            result.sequence.push_back({fresh, ideal.variables[static_cast<std::size_t>(v)]});
            names.push_back(std::move(fresh));
        }

    std::vector<VertexSet> gens;
    for (const auto& g : ideal.generators) {
        VertexSet support;
        for (int v = 0; v < n; ++v) {
            int e = g[static_cast<std::size_t>(v)];
            if (e == 0)
                continue;
            support = support.with(v);
            for (int k = 0; k < e - 1; ++k)
                support = support.with(copies[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)]);
        }
        gens.push_back(support);
    }
    result.ideal = MonomialIdeal(VertexUniverse(std::move(names)), std::move(gens));
    return result;
}

bool verify_polarization_roundtrip(const Complex& c) {
    auto d = is_grafted(c);
    if (!d)
        throw Error("NotGrafted", "polarization round-trip needs a grafted complex");
    ArtinianReduction ar = artinian_reduction(c, *d);

    // Working generators as exponent vectors over the complex's universe; the
    // y variables are the designated free vertices themselves.
    int n = c.vertex_count();
    int r = d->r;
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(ar.leaf_free_vertex[static_cast<std::size_t>(i)])] =
            ar.power_exponents[static_cast<std::size_t>(i)];
        gens.push_back(std::move(e));
    }
    for (const auto& deck : ar.deck_monomials) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < r; ++i)
            e[static_cast<std::size_t>(ar.leaf_free_vertex[static_cast<std::size_t>(i)])] =
                deck[static_cast<std::size_t>(i)];
        gens.push_back(std::move(e));
    }

    // One splitting step per linear form: every generator divisible by y
    // trades one power of y for the named fresh vertex.
    for (auto [y, x] : ar.linear_sequence)
        for (auto& g : gens)
            if (g[static_cast<std::size_t>(y)] >= 1) {
                --g[static_cast<std::size_t>(y)];
                ++g[static_cast<std::size_t>(x)];
            }

    std::vector<VertexSet> supports;
    for (const auto& g : gens) {
        VertexSet s;
        for (int v = 0; v < n; ++v) {
            if (g[static_cast<std::size_t>(v)] > 1)
                return false; // splitting failed to reach a square-free ideal
            if (g[static_cast<std::size_t>(v)] == 1)
                s = s.with(v);
        }
        supports.push_back(s);
    }
    std::sort(supports.begin(), supports.end(), size_lex_less);
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    return supports == c.facets();
}

} // namespace facetideal
