#include "facetideal/io.hpp"

#include <algorithm>
#include <sstream>

#include "facetideal/errors.hpp"

namespace facetideal {

Complex parse_facets(const std::string& text) {
    std::vector<std::string> universe;
    bool have_universe = false;
    std::vector<std::vector<std::string>> facets;

    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tokens;
        std::string w;
        while (words >> w)
            tokens.push_back(w);
        if (tokens.empty())
            continue;
        if (tokens.front() == "vertices:") {
            if (have_universe || !facets.empty())
                throw Error("ParseError", "vertices: header must come first and only once");
            universe.assign(tokens.begin() + 1, tokens.end());
            have_universe = true;
            continue;
        }
        facets.push_back(std::move(tokens));
    }

    if (have_universe)
        return Complex::from_labels(std::move(universe), facets);
    return Complex::from_facet_labels(facets);
}

Complex parse_complex(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j = Json::parse(text);
        return complex_from_json(j);
    }
    return parse_facets(text);
}

std::string to_facets_text(const Complex& c) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& name : c.universe().names())
        out << ' ' << name;
    out << '\n';
    for (const auto& facet : c.facet_labels()) {
        for (std::size_t i = 0; i < facet.size(); ++i)
            out << (i ? " " : "") << facet[i];
        out << '\n';
    }
    return out.str();
}

namespace {

Json labels_json(const VertexUniverse& u, const std::vector<VertexSet>& sets) {
    Json out = Json::array();
    for (VertexSet s : sets)
        out.push_back(u.labels_of(s));
    return out;
}

} // namespace

Json complex_to_json(const Complex& c) {
    Json j;
    j["vertices"] = c.universe().names();
    j["facets"] = labels_json(c.universe(), c.facets());
    return j;
}

Complex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("facets"))
        throw Error("ParseError", "expected an object with a \"facets\" array");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j.at("facets"))
        facets.push_back(f.get<std::vector<std::string>>());
    if (j.contains("vertices"))
        return Complex::from_labels(j.at("vertices").get<std::vector<std::string>>(), facets);
    return Complex::from_facet_labels(facets);
}

Json cover_report_to_json(const CoverReport& covers, const IndependenceReport& independence) {
    Json j;
    j["alpha"] = covers.alpha;
    j["beta"] = independence.beta;
    j["unmixed"] = covers.unmixed;
    j["covers"] = labels_json(covers.universe, covers.covers);
    j["independent_sets"] = independence.witnesses;
    return j;
}

Json certificate_to_json(const ForestCertificate& cert, const char* key) {
    Json j;
    j[key] = cert.verdict;
    j["witness"] = cert.witness ? Json(*cert.witness) : Json(nullptr);
    return j;
}

Json leaf_report_to_json(const Complex& c, const LeafReport& report) {
    const auto& u = c.universe();
    Json j;
    j["facet"] = u.labels_of(report.facet);
    j["is_leaf"] = report.is_leaf;
    j["universal_set"] = labels_json(u, report.universal_set);
    j["joints"] = labels_json(u, report.joints);
    j["free_vertices"] = u.labels_of(report.free_vertices);
    return j;
}

Json localization_to_json(const Complex& original, const LocalizationResult& result) {
    Json j;
    if (result.kind == LocalizationResult::Kind::UnitIdeal) {
        j["kind"] = "unit_ideal";
    } else {
        j["kind"] = "complex";
        j["complex"] = complex_to_json(*result.complex);
    }
    j["kept"] = original.universe().labels_of(result.kept_vertices);
    return j;
}

Json grafting_to_json(const GraftingDecomposition& d) {
    Json j;
    j["leaves"] = labels_json(d.universe, d.leaves);
    j["deck"] = labels_json(d.universe, d.deck);
    j["r"] = d.r;
    j["s"] = d.s;
    return j;
}

Json ideal_to_json(const MonomialIdeal& ideal) {
    Json j;
    j["generators"] = ideal.generator_labels();
    if (ideal.was_minimized)
        j["minimized"] = true;
    return j;
}

Json decomposition_to_json(const DecompositionReport& report) {
    Json j;
    j["primes"] = labels_json(report.universe, report.primes);
    j["height"] = report.height;
    j["krull_dim"] = report.krull_dim;
    return j;
}

} // namespace facetideal
