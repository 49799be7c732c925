#include "facetideal/ideal.hpp"

#include <algorithm>

#include "facetideal/covers.hpp"
#include "facetideal/errors.hpp"

namespace facetideal {

MonomialIdeal::MonomialIdeal(VertexUniverse u, std::vector<VertexSet> gens)
    : universe(std::move(u)) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].empty())
            throw Error("EmptyFacet", "generator #" + std::to_string(i) + " has empty support");
        if (!gens[i].subset_of(universe.all()))
            throw Error("UnknownVertex",
                        "generator #" + std::to_string(i) + " uses unknown variables");
    }
    std::size_t given = gens.size();
    std::sort(gens.begin(), gens.end(), size_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (VertexSet g : gens) {
        bool redundant = false;
        for (VertexSet h : generators)
            if (h.proper_subset_of(g)) {
                redundant = true;
                break;
            }
        if (!redundant)
            generators.push_back(g);
    }
    was_minimized = generators.size() != given;
}

std::vector<std::vector<std::string>> MonomialIdeal::generator_labels() const {
    std::vector<std::vector<std::string>> out;
    for (VertexSet g : generators)
        out.push_back(universe.labels_of(g));
    return out;
}

MonomialIdeal facet_ideal(const Complex& c) {
    return MonomialIdeal(c.universe(), c.facets());
}

Complex facet_complex(const MonomialIdeal& ideal) {
    return Complex(ideal.universe, ideal.generators);
}

MonomialIdeal nonface_ideal(const Complex& c) {
    if (c.empty())
        throw Error("EmptyComplex", "non-face ideal of the empty complex is undefined");
    int n = c.vertex_count();
    if (n > 20)
        throw Error("UniverseTooLarge", "non-face search is exponential; capped at 20 vertices");

    // Ascend by cardinality; a set containing a known minimal non-face is
    // pruned, so everything kept is minimal.
    std::vector<VertexSet> minimal_nonfaces;
    std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s(bits);
        by_size[static_cast<std::size_t>(s.size())].push_back(s);
    }
    for (int size = 1; size <= n; ++size) {
        std::vector<VertexSet> found;
        for (VertexSet s : by_size[static_cast<std::size_t>(size)]) {
            if (c.is_face(s))
                continue;
            bool contains_smaller = false;
            for (VertexSet m : minimal_nonfaces)
                if (m.subset_of(s)) {
                    contains_smaller = true;
                    break;
                }
            if (!contains_smaller)
                found.push_back(s);
        }
        minimal_nonfaces.insert(minimal_nonfaces.end(), found.begin(), found.end());
    }
    std::sort(minimal_nonfaces.begin(), minimal_nonfaces.end(), size_lex_less);
    return MonomialIdeal(c.universe(), std::move(minimal_nonfaces));
}

Complex nonface_complex(const MonomialIdeal& ideal) {
    int n = ideal.universe.size();
    if (n > 20)
        throw Error("UniverseTooLarge", "face search is exponential; capped at 20 vertices");
    if (ideal.generators.empty())
        return Complex(ideal.universe, {ideal.universe.all()});

    auto is_sr_face = [&](VertexSet s) {
        for (VertexSet g : ideal.generators)
            if (g.subset_of(s))
                return false;
        return true;
    };

    std::vector<VertexSet> facets;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s(bits);
        if (!is_sr_face(s))
            continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!s.contains(v) && is_sr_face(s.with(v)))
                maximal = false;
        if (maximal)
            facets.push_back(s);
    }
    // Every variable a generator: the only face is empty (the irrelevant
    // complex), rendered as the zero-facet complex.
    if (facets.size() == 1 && facets[0].empty())
        facets.clear();
    return Complex(ideal.universe, std::move(facets));
}

DecompositionReport decompose(const Complex& c) {
    CoverReport covers = minimal_vertex_covers(c);

    DecompositionReport report;
    report.universe = c.universe();
    report.primes = covers.covers;
    report.height = covers.alpha;
    report.krull_dim = c.vertex_count() - covers.alpha;

    // dim R/I = dim of the Stanley-Reisner complex + 1; the widest facet of
    // that complex is the complement of a minimum cover.
    if (c.vertex_count() <= 20) {
        Complex gamma = nonface_complex(facet_ideal(c));
        int gamma_dim = gamma.empty() ? -1 : dimension(gamma);
        if (gamma_dim + 1 != report.krull_dim)
            throw Error("InternalInconsistency",
                        "Stanley-Reisner dimension disagrees with |V| - alpha");
    }
    return report;
}

bool verify_intersection(const Complex& c, int max_vertices) {
    if (c.empty())
        throw Error("EmptyComplex", "nothing to verify on the empty complex");
    int n = c.vertex_count();
    if (n > max_vertices)
        throw Error("UniverseTooLarge", "brute-force bound is " + std::to_string(max_vertices) +
                                            " vertices, got " + std::to_string(n));

    CoverReport covers = minimal_vertex_covers(c);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet m(bits);
        bool in_ideal = false;
        for (VertexSet f : c.facets())
            if (f.subset_of(m)) {
                in_ideal = true;
                break;
            }
        bool in_every_prime = true;
        for (VertexSet cover : covers.covers)
            if (!m.intersects(cover)) {
                in_every_prime = false;
                break;
            }
        if (in_ideal != in_every_prime)
            return false;
    }
    return true;
}

} // namespace facetideal
