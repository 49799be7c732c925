#pragma once

#include <optional>
#include <vector>

#include "facetideal/complex.hpp"

namespace facetideal {

/// Result of restricting every facet to a kept vertex set.  When some facet
/// misses the kept set entirely, the localized ideal contains a unit and the
/// sentinel kind is returned instead of a complex.
struct LocalizationResult {
    enum class Kind { Complex, UnitIdeal };
    Kind kind = Kind::UnitIdeal;
    std::optional<class Complex> complex;
    VertexSet kept_vertices; // indices into the original universe
};

/// The split of a grafted complex into its leaves F_1..F_r and the remaining
/// deck G_1..G_s.  Leaves are pairwise disjoint, cover every deck vertex, and
/// are exactly the leaves of the complex; removing any deck facet leaves a
/// grafted complex again.
struct GraftingDecomposition {
    VertexUniverse universe;
    std::vector<VertexSet> leaves;
    std::vector<VertexSet> deck;
    int r = 0;
    int s = 0;
};

LocalizationResult localize(const Complex& c, VertexSet kept);
LocalizationResult localize(const Complex& c, const std::vector<std::string>& kept_labels);

/// Checker: returns the decomposition iff the complex is grafted.
std::optional<GraftingDecomposition> is_grafted(const Complex& c);

/// Constructor: adds one leaf per partition class (class plus a fresh vertex)
/// and verifies the result with is_grafted.  An empty partition means the
/// whisker default, one singleton class per vertex.  Throws BadPartition /
/// GraftVerificationFailed.
Complex graft(const Complex& c, const std::vector<std::vector<std::string>>& partition = {});

} // namespace facetideal
