#pragma once

#include <string>

#include "json.hpp"

#include "facetideal/complex.hpp"
#include "facetideal/covers.hpp"
#include "facetideal/ideal.hpp"
#include "facetideal/tree.hpp"
#include "facetideal/transform.hpp"

namespace facetideal {

using Json = nlohmann::ordered_json;

/// Parses the ".facets" text format: one facet per line of whitespace-
/// separated labels, `#` comments, optional leading `vertices:` header fixing
/// the universe order.  Without a header the universe is the union of labels
/// in first-seen order.
Complex parse_facets(const std::string& text);

/// Detects JSON (first non-space byte '{') vs .facets text.
Complex parse_complex(const std::string& text);

std::string to_facets_text(const Complex& c);

Json complex_to_json(const Complex& c);
Complex complex_from_json(const Json& j);

Json cover_report_to_json(const CoverReport& covers, const IndependenceReport& independence);
Json certificate_to_json(const ForestCertificate& cert, const char* key);
Json leaf_report_to_json(const Complex& c, const LeafReport& report);
Json localization_to_json(const Complex& original, const LocalizationResult& result);
Json grafting_to_json(const GraftingDecomposition& d);
Json ideal_to_json(const MonomialIdeal& ideal);
Json decomposition_to_json(const DecompositionReport& report);

} // namespace facetideal
