#include "facetideal/covers.hpp"

#include <algorithm>

#include "facetideal/errors.hpp"

namespace facetideal {

bool is_vertex_cover(const Complex& c, VertexSet candidate) {
    for (VertexSet f : c.facets())
        if (!f.intersects(candidate))
            return false;
    return true;
}

bool is_vertex_cover(const Complex& c, const std::vector<std::string>& labels) {
    return is_vertex_cover(c, c.universe().set_of(labels));
}

namespace {

// Pick an uncovered facet and branch on its vertices; each branch forbids the
// vertices tried before it at the same node, so every minimal cover is still
// reached exactly once modulo the final filter.
void enumerate_covers(const std::vector<VertexSet>& facets, VertexSet chosen, VertexSet banned,
                      std::vector<VertexSet>& out) {
    const VertexSet* uncovered = nullptr;
    for (const VertexSet& f : facets)
        if (!f.intersects(chosen)) {
            uncovered = &f;
            break;
        }
    if (!uncovered) {
        out.push_back(chosen);
        return;
    }
    VertexSet local_ban = banned;
    for (int v : uncovered->members()) {
        if (local_ban.contains(v))
            continue;
        enumerate_covers(facets, chosen.with(v), local_ban, out);
        local_ban = local_ban.with(v);
    }
}

bool cover_is_minimal(const std::vector<VertexSet>& facets, VertexSet cover) {
    for (int v : cover.members()) {
        VertexSet reduced = cover.without(v);
        bool still_cover = true;
        for (VertexSet f : facets)
            if (!f.intersects(reduced)) {
                still_cover = false;
                break;
            }
        if (still_cover)
            return false;
    }
    return true;
}

} // namespace

std::vector<VertexSet> minimal_covers_of(const std::vector<VertexSet>& facets) {
    std::vector<VertexSet> candidates;
    enumerate_covers(facets, VertexSet{}, VertexSet{}, candidates);
    std::sort(candidates.begin(), candidates.end(), size_lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<VertexSet> minimal;
    for (VertexSet c : candidates)
        if (cover_is_minimal(facets, c))
            minimal.push_back(c);
    return minimal;
}

CoverReport minimal_vertex_covers(const Complex& c) {
    if (c.empty())
        throw Error("EmptyComplex", "the empty complex has no vertex covers");
    CoverReport report;
    report.universe = c.universe();
    report.covers = minimal_covers_of(c.facets());
    report.alpha = report.covers.front().size();
    report.unmixed = true;
    for (VertexSet cov : report.covers)
        if (cov.size() != report.alpha) {
            report.unmixed = false;
            break;
        }
    return report;
}

int covering_number(const Complex& c) {
    return minimal_vertex_covers(c).alpha;
}

namespace {

void enumerate_independent(const std::vector<VertexSet>& facets, int start,
                           std::vector<int>& current, VertexSet used,
                           IndependenceReport& report) {
    int q = static_cast<int>(facets.size());

    // Members of `current` are subsets of `used`, so intersecting `used` also
    // rules them out as extensions.
    bool maximal = true;
    for (int j = 0; j < q; ++j)
        if (!facets[static_cast<std::size_t>(j)].intersects(used)) {
            maximal = false;
            break;
        }
    if (maximal && !current.empty())
        report.maximal_sets.push_back(current);

    for (int j = start; j < q; ++j) {
        if (facets[static_cast<std::size_t>(j)].intersects(used))
            continue;
        current.push_back(j);
        enumerate_independent(facets, j + 1, current, used | facets[static_cast<std::size_t>(j)],
                              report);
        current.pop_back();
    }
}

} // namespace

IndependenceReport independence(const Complex& c) {
    if (c.empty())
        throw Error("EmptyComplex", "the empty complex has no independent facet sets");
    IndependenceReport report;
    std::vector<int> current;
    enumerate_independent(c.facets(), 0, current, VertexSet{}, report);

    report.beta = 0;
    for (const auto& s : report.maximal_sets)
        report.beta = std::max(report.beta, static_cast<int>(s.size()));
    for (const auto& s : report.maximal_sets)
        if (static_cast<int>(s.size()) == report.beta)
            report.witnesses.push_back(s);
    return report;
}

} // namespace facetideal
