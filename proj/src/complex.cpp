#include "facetideal/complex.hpp"

#include <algorithm>

#include "facetideal/errors.hpp"

namespace facetideal {

VertexUniverse::VertexUniverse(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > 64)
        throw Error("UniverseTooLarge", "at most 64 vertices are supported, got " +
                                            std::to_string(names_.size()));
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
        if (!inserted)
            throw Error("DuplicateVertex", "vertex label repeated: " + names_[i]);
    }
}

std::optional<int> VertexUniverse::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int VertexUniverse::require(std::string_view label) const {
    auto v = find(label);
    if (!v)
        throw Error("UnknownVertex", "no such vertex: " + std::string(label));
    return *v;
}

VertexSet VertexUniverse::set_of(const std::vector<std::string>& labels) const {
    VertexSet s;
    for (const auto& l : labels)
        s = s.with(require(l));
    return s;
}

std::vector<std::string> VertexUniverse::labels_of(VertexSet s) const {
    std::vector<std::string> out;
    for (int v : s.members())
        out.push_back(name(v));
    return out;
}

namespace {

std::vector<VertexSet> normalize_facets(std::vector<VertexSet> facets) {
    std::sort(facets.begin(), facets.end(), size_lex_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<VertexSet> maximal;
    for (VertexSet f : facets) {
        bool dominated = false;
        for (VertexSet g : facets)
            if (g != f && f.subset_of(g)) {
                dominated = true;
                break;
            }
        if (!dominated)
            maximal.push_back(f);
    }
    return maximal;
}

} // namespace

Complex::Complex(VertexUniverse universe, std::vector<VertexSet> facets)
    : universe_(std::move(universe)) {
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (facets[i].empty())
            throw Error("EmptyFacet", "facet #" + std::to_string(i) + " is empty");
        if (!facets[i].subset_of(universe_.all()))
            throw Error("UnknownVertex", "facet #" + std::to_string(i) +
                                             " uses vertices outside the universe");
    }
    facets_ = normalize_facets(std::move(facets));
}

Complex Complex::from_labels(std::vector<std::string> universe,
                             const std::vector<std::vector<std::string>>& facets) {
    VertexUniverse u(std::move(universe));
    std::vector<VertexSet> sets;
    sets.reserve(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (facets[i].empty())
            throw Error("EmptyFacet", "facet #" + std::to_string(i) + " is empty");
        sets.push_back(u.set_of(facets[i]));
    }
    return Complex(std::move(u), std::move(sets));
}

Complex Complex::from_facet_labels(const std::vector<std::vector<std::string>>& facets) {
    std::vector<std::string> universe;
    for (const auto& f : facets)
        for (const auto& l : f)
            if (std::find(universe.begin(), universe.end(), l) == universe.end())
                universe.push_back(l);
    return from_labels(std::move(universe), facets);
}

VertexSet Complex::support() const {
    VertexSet s;
    for (VertexSet f : facets_)
        s = s | f;
    return s;
}

int Complex::facet_index(VertexSet f) const {
    for (std::size_t i = 0; i < facets_.size(); ++i)
        if (facets_[i] == f)
            return static_cast<int>(i);
    return -1;
}

bool Complex::is_face(VertexSet s) const {
    for (VertexSet f : facets_)
        if (s.subset_of(f))
            return true;
    return false;
}

std::vector<std::vector<std::string>> Complex::facet_labels() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(facets_.size());
    for (VertexSet f : facets_)
        out.push_back(universe_.labels_of(f));
    return out;
}

int dimension(const Complex& c) {
    if (c.empty())
        throw Error("EmptyComplex", "dimension of the empty complex is undefined");
    int best = 0;
    for (VertexSet f : c.facets())
        best = std::max(best, f.size());
    return best - 1;
}

namespace {

/// Rebuild a complex from a facet subset, shrinking the universe to the
/// vertices those facets use while preserving label order.
Complex shrink_to(const Complex& c, const std::vector<VertexSet>& kept_facets) {
    VertexSet used;
    for (VertexSet f : kept_facets)
        used = used | f;

    std::vector<std::string> names;
    std::vector<int> new_index(static_cast<std::size_t>(c.vertex_count()), -1);
    for (int v = 0; v < c.vertex_count(); ++v)
        if (used.contains(v)) {
            new_index[static_cast<std::size_t>(v)] = static_cast<int>(names.size());
            names.push_back(c.universe().name(v));
        }

    std::vector<VertexSet> remapped;
    remapped.reserve(kept_facets.size());
    for (VertexSet f : kept_facets) {
        VertexSet r;
        for (int v : f.members())
            r = r.with(new_index[static_cast<std::size_t>(v)]);
        remapped.push_back(r);
    }
    return Complex(VertexUniverse(std::move(names)), std::move(remapped));
}

} // namespace

Complex remove_facet(const Complex& c, VertexSet facet) {
    int idx = c.facet_index(facet);
    if (idx < 0)
        throw Error("NotAFacet", "the given set is not a facet of the complex");
    std::vector<VertexSet> kept;
    for (int i = 0; i < c.facet_count(); ++i)
        if (i != idx)
            kept.push_back(c.facet(i));
    return shrink_to(c, kept);
}

Complex remove_facet(const Complex& c, const std::vector<std::string>& facet_labels) {
    return remove_facet(c, c.universe().set_of(facet_labels));
}

Complex subcollection(const Complex& c, const std::vector<int>& facet_indices) {
    if (facet_indices.empty())
        throw Error("EmptySelection", "subcollection needs at least one facet index");
    std::vector<VertexSet> kept;
    for (int i : facet_indices) {
        if (i < 0 || i >= c.facet_count())
            throw Error("IndexOutOfRange", "facet index out of range: " + std::to_string(i));
        kept.push_back(c.facet(i));
    }
    return shrink_to(c, kept);
}

std::vector<std::vector<int>> component_index_sets(const std::vector<VertexSet>& facets) {
    int q = static_cast<int>(facets.size());
    std::vector<int> comp(static_cast<std::size_t>(q), -1);
    int n_comp = 0;
    for (int i = 0; i < q; ++i) {
        if (comp[static_cast<std::size_t>(i)] >= 0)
            continue;
        std::vector<int> stack{i};
        comp[static_cast<std::size_t>(i)] = n_comp;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int j = 0; j < q; ++j)
                if (comp[static_cast<std::size_t>(j)] < 0 &&
                    facets[static_cast<std::size_t>(cur)].intersects(
                        facets[static_cast<std::size_t>(j)])) {
                    comp[static_cast<std::size_t>(j)] = n_comp;
                    stack.push_back(j);
                }
        }
        ++n_comp;
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_comp));
    for (int i = 0; i < q; ++i)
        out[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].push_back(i);
    return out;
}

bool is_connected(const Complex& c) {
    if (c.empty())
        throw Error("EmptyComplex", "connectivity of the empty complex is undefined");
    return component_index_sets(c.facets()).size() == 1;
}

std::vector<Complex> connected_components(const Complex& c) {
    if (c.empty())
        throw Error("EmptyComplex", "the empty complex has no components");
    std::vector<Complex> out;
    for (const auto& idx : component_index_sets(c.facets()))
        out.push_back(subcollection(c, idx));
    return out;
}

} // namespace facetideal
