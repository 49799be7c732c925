// Command-line front end: reads a complex from a .facets file, JSON file or
// stdin, runs one analysis verb, and prints a JSON report (or a best-effort
// table with --format pretty).  Boolean verbs exit 1 on a negative verdict;
// errors exit 2.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "facetideal/cm.hpp"
#include "facetideal/covers.hpp"
#include "facetideal/errors.hpp"
#include "facetideal/generate.hpp"
#include "facetideal/io.hpp"
#include "facetideal/report.hpp"
#include "facetideal/transform.hpp"
#include "facetideal/tree.hpp"

namespace {

using namespace facetideal;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw Error("InputError", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Complex load_complex(const std::string& path) {
    return parse_complex(read_input(path));
}

void emit(const Json& j, bool pretty) {
    if (!pretty) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // Best-effort human rendering: flat key/value lines.
    for (const auto& [key, value] : j.items())
        std::cout << key << ": " << value.dump() << "\n";
}

std::vector<std::vector<std::string>> parse_partition(const std::string& spec) {
    std::vector<std::vector<std::string>> classes;
    std::istringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, '|')) {
        std::istringstream words(group);
        std::vector<std::string> labels;
        std::string w;
        while (words >> w)
            labels.push_back(w);
        if (!labels.empty())
            classes.push_back(std::move(labels));
    }
    return classes;
}

std::vector<std::string> parse_csv(const std::string& spec) {
    std::vector<std::string> out;
    std::istringstream items(spec);
    std::string item;
    while (std::getline(items, item, ',')) {
        std::string trimmed;
        std::istringstream word(item);
        word >> trimmed;
        if (!trimmed.empty())
            out.push_back(trimmed);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"facet-ideal combinatorics: trees, covers, grafting and "
                 "Cohen-Macaulay certification of simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the verb

    std::string format = "json";
    app.add_option("--format", format, "json (default) or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for homology links")->check(CLI::Range(1, 64));

    std::string input = "-";
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file (.facets or JSON), - for stdin");
    };

    auto* cmd_analyze = app.add_subcommand("analyze", "full report on a complex");
    add_input(cmd_analyze);
    bool with_reisner = false;
    int characteristic = 0;
    cmd_analyze->add_flag("--reisner", with_reisner, "include the homology oracle");
    cmd_analyze->add_option("--char", characteristic, "coefficient characteristic (0 or prime)");

    auto* cmd_covers = app.add_subcommand("covers", "minimal vertex covers and independence");
    add_input(cmd_covers);
    int max_witnesses = 0;
    cmd_covers->add_option("--max-witnesses", max_witnesses,
                           "cap the independent-set list (0 = all)");

    auto* cmd_leaves = app.add_subcommand("leaves", "leaf facets and their reports");
    add_input(cmd_leaves);

    auto* cmd_is_tree = app.add_subcommand("is-tree", "tree certificate; exit 1 if not a tree");
    add_input(cmd_is_tree);

    auto* cmd_localize = app.add_subcommand("localize", "restrict to a kept vertex set");
    add_input(cmd_localize);
    std::string keep;
    cmd_localize->add_option("--keep", keep, "comma-separated vertex labels")->required();

    auto* cmd_graft = app.add_subcommand("graft", "graft new leaves onto the complex");
    add_input(cmd_graft);
    std::string partition_spec;
    cmd_graft->add_option("--partition", partition_spec,
                          "classes as labels separated by spaces, classes by | "
                          "(default: one singleton class per vertex)");

    auto* cmd_ideal = app.add_subcommand("ideal", "facet or non-face ideal generators");
    add_input(cmd_ideal);
    bool want_facet = false, want_nonface = false;
    cmd_ideal->add_flag("--facet", want_facet, "facet ideal (default)");
    cmd_ideal->add_flag("--nonface", want_nonface, "Stanley-Reisner ideal");

    auto* cmd_decompose = app.add_subcommand("decompose", "minimal primes, height, dimension");
    add_input(cmd_decompose);

    auto* cmd_cm = app.add_subcommand("cm", "Cohen-Macaulay certification; exit 1 on negative");
    add_input(cmd_cm);
    std::string method = "both";
    cmd_cm->add_option("--method", method, "tree, reisner, or both")
        ->check(CLI::IsMember({"tree", "reisner", "both"}));
    cmd_cm->add_option("--char", characteristic, "coefficient characteristic (0 or prime)");

    auto* cmd_polarize = app.add_subcommand("polarize-check",
                                            "polarization round-trip; exit 1 on mismatch");
    add_input(cmd_polarize);

    auto* cmd_random = app.add_subcommand("random", "emit a seeded random complex as JSON");
    GeneratorConfig gen_cfg;
    std::string mode = "random";
    cmd_random->add_option("--seed", gen_cfg.seed, "64-bit seed");
    cmd_random->add_option("--vertices", gen_cfg.vertices, "vertex bound");
    cmd_random->add_option("--facets", gen_cfg.facets, "facet bound");
    cmd_random->add_option("--mode", mode, "random, random_tree, or random_grafted")
        ->check(CLI::IsMember({"random", "random_tree", "random_grafted"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    bool pretty = format == "pretty";
    try {
        if (*cmd_analyze) {
            AnalyzeOptions opt;
            opt.with_reisner = with_reisner;
            opt.characteristic = characteristic;
            opt.jobs = jobs;
            emit(analyze(load_complex(input), opt), pretty);
        } else if (*cmd_covers) {
            Complex c = load_complex(input);
            IndependenceReport indep = independence(c);
            if (max_witnesses > 0 &&
                static_cast<int>(indep.witnesses.size()) > max_witnesses)
                indep.witnesses.resize(static_cast<std::size_t>(max_witnesses));
            emit(cover_report_to_json(minimal_vertex_covers(c), indep), pretty);
        } else if (*cmd_leaves) {
            Complex c = load_complex(input);
            Json j;
            Json list = Json::array();
            Json reports = Json::array();
            for (VertexSet f : leaves(c)) {
                list.push_back(c.universe().labels_of(f));
                reports.push_back(leaf_report_to_json(c, leaf_report(c, f)));
            }
            j["leaves"] = std::move(list);
            j["reports"] = std::move(reports);
            emit(j, pretty);
        } else if (*cmd_is_tree) {
            ForestCertificate cert = is_tree(load_complex(input));
            emit(certificate_to_json(cert, "tree"), pretty);
            return cert.verdict ? 0 : 1;
        } else if (*cmd_localize) {
            Complex c = load_complex(input);
            emit(localization_to_json(c, localize(c, parse_csv(keep))), pretty);
        } else if (*cmd_graft) {
            Complex c = load_complex(input);
            Complex g = graft(c, parse_partition(partition_spec));
            Json j;
            j["complex"] = complex_to_json(g);
            auto d = is_grafted(g);
            j["grafting"] = d ? grafting_to_json(*d) : Json(nullptr);
            emit(j, pretty);
        } else if (*cmd_ideal) {
            Complex c = load_complex(input);
            if (want_facet && want_nonface)
                throw Error("UsageError", "choose one of --facet / --nonface");
            emit(ideal_to_json(want_nonface ? nonface_ideal(c) : facet_ideal(c)), pretty);
        } else if (*cmd_decompose) {
            emit(decomposition_to_json(decompose(load_complex(input))), pretty);
        } else if (*cmd_cm) {
            Complex c = load_complex(input);
            Json j;
            bool verdict = true;
            if (method == "tree") {
                bool tree_cm = cm_tree(c); // NotATree surfaces as an error
                j["tree_method"] = tree_cm;
                verdict = tree_cm;
            } else if (method == "both") {
                // tree method only where it applies
                j["tree_method"] = is_tree(c).verdict ? Json(cm_tree(c)) : Json(nullptr);
            }
            if (method == "reisner" || method == "both") {
                HomologyReport r = cm_reisner(c, characteristic, jobs);
                j["reisner"] = homology_report_to_json(r);
                verdict = r.cm;
            }
            j["cm"] = verdict;
            emit(j, pretty);
            return verdict ? 0 : 1;
        } else if (*cmd_polarize) {
            Complex c = load_complex(input);
            bool ok = verify_polarization_roundtrip(c);
            Json j;
            j["roundtrip"] = ok;
            emit(j, pretty);
            return ok ? 0 : 1;
        } else if (*cmd_random) {
            if (mode == "random_tree")
                gen_cfg.mode = GeneratorConfig::Mode::RandomTree;
            else if (mode == "random_grafted")
                gen_cfg.mode = GeneratorConfig::Mode::RandomGrafted;
            emit(complex_to_json(generate(gen_cfg)), pretty);
        }
    } catch (const Error& e) {
        Json j;
        j["error"] = e.code();
        j["message"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = "Unexpected";
        j["message"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return 2;
    }
    return 0;
}
