#include "facetideal/generate.hpp"

#include <algorithm>
#include <random>

#include "facetideal/errors.hpp"
#include "facetideal/transform.hpp"
#include "facetideal/tree.hpp"

namespace facetideal {

namespace {

// Explicit modulo draw: std::uniform_int_distribution output is
// implementation-defined, and generated fixtures must be reproducible.
int draw(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

std::vector<std::string> label_universe(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        names.push_back("v" + std::to_string(i));
    return names;
}

VertexSet random_subset(std::mt19937_64& rng, int n, int size) {
    VertexSet s;
    while (s.size() < size)
        s = s.with(draw(rng, n));
    return s;
}

Complex random_complex(std::mt19937_64& rng, int max_vertices, int max_facets) {
    int n = 2 + draw(rng, std::max(1, max_vertices - 1));
    int q = 1 + draw(rng, max_facets);
    std::vector<VertexSet> facets;
    int attempts = 0;
    while (static_cast<int>(facets.size()) < q && attempts < 64) {
        ++attempts;
        int size = 1 + draw(rng, std::min(n, 4));
        VertexSet f = random_subset(rng, n, size);
        bool comparable = false;
        for (VertexSet g : facets)
            if (f.subset_of(g) || g.subset_of(f)) {
                comparable = true;
                break;
            }
        if (!comparable)
            facets.push_back(f);
    }
    VertexSet used;
    for (VertexSet f : facets)
        used = used | f;
    // Re-index onto the vertices actually drawn.
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v : used.members())
        remap[static_cast<std::size_t>(v)] = next++;
    std::vector<VertexSet> packed;
    for (VertexSet f : facets) {
        VertexSet p;
        for (int v : f.members())
            p = p.with(remap[static_cast<std::size_t>(v)]);
        packed.push_back(p);
    }
    return Complex(VertexUniverse(label_universe(next)), std::move(packed));
}

// Leaf-attachment growth: every new facet meets the old complex inside a
// proper face of a single existing facet and brings at least one fresh
// vertex, so it is attached as a leaf.
Complex grow_tree(std::mt19937_64& rng, int max_vertices, int max_facets) {
    int q_target = 1 + draw(rng, max_facets);
    int first_size = std::min(max_vertices, 2 + draw(rng, 3));
    std::vector<VertexSet> facets{VertexSet::full(first_size)};
    int n = first_size;

    while (static_cast<int>(facets.size()) < q_target && n < max_vertices) {
        VertexSet host = facets[static_cast<std::size_t>(draw(rng, static_cast<int>(facets.size())))];
        std::vector<int> host_vertices = host.members();
        int keep = 1 + draw(rng, host.size() - 1); // nonempty proper subset
        VertexSet base;
        while (base.size() < keep)
            base = base.with(host_vertices[static_cast<std::size_t>(
                draw(rng, static_cast<int>(host_vertices.size())))]);
        int fresh = std::min(max_vertices - n, 1 + draw(rng, 2));
        if (fresh == 0)
            break;
        VertexSet leaf = base;
        for (int k = 0; k < fresh; ++k)
            leaf = leaf.with(n++);
        facets.push_back(leaf);
    }
    return Complex(VertexUniverse(label_universe(n)), std::move(facets));
}

Complex random_grafted(std::mt19937_64& rng, int max_vertices, int max_facets) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        Complex base = random_complex(rng, max_vertices, max_facets);
        if (base.empty())
            continue;

        // Random partition into classes each inside some facet; uncovered
        // vertices are swept up facet by facet.
        std::vector<std::vector<std::string>> partition;
        VertexSet uncovered = base.support();
        bool ok = true;
        while (!uncovered.empty() && ok) {
            std::vector<int> hosts;
            for (int i = 0; i < base.facet_count(); ++i)
                if (base.facet(i).intersects(uncovered))
                    hosts.push_back(i);
            if (hosts.empty()) {
                ok = false;
                break;
            }
            VertexSet pool = base.facet(hosts[static_cast<std::size_t>(
                                 draw(rng, static_cast<int>(hosts.size())))]) &
                             uncovered;
            std::vector<int> members = pool.members();
            int size = 1 + draw(rng, static_cast<int>(members.size()));
            VertexSet cls;
            while (cls.size() < size)
                cls = cls.with(members[static_cast<std::size_t>(
                    draw(rng, static_cast<int>(members.size())))]);
            partition.push_back(base.universe().labels_of(cls));
            uncovered = uncovered.minus(cls);
        }
        if (!ok)
            continue;
        try {
            return graft(base, partition);
        } catch (const Error&) {
            // Chain condition failed for this partition; fall back to the
            // whisker, which always verifies.
            if (attempt >= 16)
                return graft(base);
        }
    }
    throw Error("BoundsTooLarge", "could not generate a grafted complex within bounds");
}

} // namespace

Complex generate(const GeneratorConfig& config) {
    if (config.vertices < 2 || config.vertices > 24 || config.facets < 1 || config.facets > 14)
        throw Error("BoundsTooLarge",
                    "generator bounds: 2..24 vertices and 1..14 facets at desk scale");

    std::mt19937_64 rng(config.seed);
    switch (config.mode) {
    case GeneratorConfig::Mode::Random:
        for (int attempt = 0; attempt < 64; ++attempt) {
            Complex c = random_complex(rng, config.vertices, config.facets);
            if (!c.empty())
                return c;
        }
        throw Error("BoundsTooLarge", "could not generate a complex within bounds");
    case GeneratorConfig::Mode::RandomTree:
        for (int attempt = 0; attempt < 64; ++attempt) {
            Complex c = grow_tree(rng, config.vertices, config.facets);
            if (!c.empty() && is_tree(c).verdict)
                return c;
        }
        throw Error("BoundsTooLarge", "leaf-attachment growth kept failing verification");
    case GeneratorConfig::Mode::RandomGrafted:
        return random_grafted(rng, config.vertices, config.facets);
    }
    throw Error("BoundsTooLarge", "unknown generator mode");
}

} // namespace facetideal
