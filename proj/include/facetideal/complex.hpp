#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "facetideal/vertex_set.hpp"

namespace facetideal {

/// Ordered list of distinct vertex labels.  The declaration order is the
/// index order used for every canonical ordering, so fixtures keep the
/// variable order they were written with.
class VertexUniverse {
public:
    VertexUniverse() = default;
    explicit VertexUniverse(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }

    std::optional<int> find(std::string_view label) const;
    /// Like find() but throws UnknownVertex.
    int require(std::string_view label) const;

    VertexSet set_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(VertexSet s) const;
    VertexSet all() const { return VertexSet::full(size()); }

    friend bool operator==(const VertexUniverse& a, const VertexUniverse& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

/// Simplicial complex represented by its facet set over a named universe.
///
/// Invariants: facets are nonempty, pairwise incomparable, duplicate-free and
/// stored in canonical (cardinality, then lex) order.  A complex with zero
/// facets is the distinguished empty complex; operations the theory leaves
/// undefined on it throw EmptyComplex.
class Complex {
public:
    Complex() = default;
    /// Normalizes: drops duplicates and non-maximal sets, applies canonical
    /// order.  Universe vertices absent from every facet are retained (they
    /// are isolated, not facets).
    Complex(VertexUniverse universe, std::vector<VertexSet> facets);

    /// Build from labels with an explicit universe (throws UnknownVertex,
    /// EmptyFacet).
    static Complex from_labels(std::vector<std::string> universe,
                               const std::vector<std::vector<std::string>>& facets);
    /// Universe inferred as the union of labels in first-seen order.
    static Complex from_facet_labels(const std::vector<std::vector<std::string>>& facets);

    const VertexUniverse& universe() const { return universe_; }
    int vertex_count() const { return universe_.size(); }

    const std::vector<VertexSet>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    VertexSet facet(int i) const { return facets_[static_cast<std::size_t>(i)]; }
    bool empty() const { return facets_.empty(); }

    /// Union of all facets (excludes isolated universe vertices).
    VertexSet support() const;
    /// Index of the given facet, or -1.
    int facet_index(VertexSet f) const;
    /// True iff s is a face, i.e. contained in some facet.
    bool is_face(VertexSet s) const;

    std::vector<std::vector<std::string>> facet_labels() const;

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.universe_ == b.universe_ && a.facets_ == b.facets_;
    }

private:
    VertexUniverse universe_;
    std::vector<VertexSet> facets_;
};

/// max |F| - 1 over facets; throws EmptyComplex.
int dimension(const Complex& c);

/// Drops the facet and shrinks the universe to the vertices still appearing
/// in some facet.  Throws NotAFacet.
Complex remove_facet(const Complex& c, VertexSet facet);
Complex remove_facet(const Complex& c, const std::vector<std::string>& facet_labels);

/// Complex on the selected facets, universe shrunk to their vertices.
/// Throws IndexOutOfRange / EmptySelection.
Complex subcollection(const Complex& c, const std::vector<int>& facet_indices);

bool is_connected(const Complex& c);
std::vector<Complex> connected_components(const Complex& c);

/// Facet-index partition behind connected_components; cheap and universe-free.
std::vector<std::vector<int>> component_index_sets(const std::vector<VertexSet>& facets);

} // namespace facetideal
