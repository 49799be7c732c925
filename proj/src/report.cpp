#include "facetideal/report.hpp"

#include "facetideal/cm.hpp"
#include "facetideal/covers.hpp"
#include "facetideal/errors.hpp"
#include "facetideal/tree.hpp"

namespace facetideal {

Json homology_report_to_json(const HomologyReport& report) {
    Json j;
    j["characteristic"] = report.characteristic;
    j["cm"] = report.cm;
    j["cm_over_rationals"] = report.cm_over_rationals;
    if (report.obstruction) {
        j["obstruction"] = {
            {"face", report.universe.labels_of(report.obstruction->first)},
            {"degree", report.obstruction->second},
        };
    } else {
        j["obstruction"] = nullptr;
    }
    Json links = Json::array();
    for (const LinkRecord& rec : report.links) {
        Json l;
        l["face"] = report.universe.labels_of(rec.face);
        l["link_dim"] = rec.link_dim;
        l["betti_start_degree"] = -1;
        l["reduced_betti"] = rec.reduced_betti;
        l["torsion_primes"] = rec.torsion_primes;
        links.push_back(std::move(l));
    }
    j["links"] = std::move(links);
    return j;
}

Json analyze(const Complex& c, const AnalyzeOptions& options) {
    if (c.empty())
        throw Error("EmptyComplex", "nothing to analyze");

    Json j;
    j["vertices"] = c.universe().names();
    j["facets"] = complex_to_json(c)["facets"];
    j["dimension"] = dimension(c);
    j["connected"] = is_connected(c);

    CoverReport covers = minimal_vertex_covers(c);
    IndependenceReport indep = independence(c);
    j["covers"] = cover_report_to_json(covers, indep);
    j["maximal_independent_sets"] = indep.maximal_sets;

    Json leaf_list = Json::array();
    for (VertexSet f : leaves(c))
        leaf_list.push_back(c.universe().labels_of(f));
    j["leaves"] = std::move(leaf_list);

    ForestCertificate tree = is_tree(c);
    j["tree"] = certificate_to_json(tree, "tree");

    auto grafting = is_grafted(c);
    j["grafting"] = grafting ? grafting_to_json(*grafting) : Json(nullptr);

    j["decomposition"] = decomposition_to_json(decompose(c));

    Json cm;
    cm["tree_method"] = tree.verdict ? Json(cm_tree(c)) : Json(nullptr);
    if (options.with_reisner)
        cm["reisner"] = homology_report_to_json(
            cm_reisner(c, options.characteristic, options.jobs));
    else
        cm["reisner"] = nullptr;
    j["cm"] = std::move(cm);
    return j;
}

} // namespace facetideal
