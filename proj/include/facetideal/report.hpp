#pragma once

#include "facetideal/cm.hpp"
#include "facetideal/io.hpp"

namespace facetideal {

Json homology_report_to_json(const HomologyReport& report);

struct AnalyzeOptions {
    bool with_reisner = false;
    int characteristic = 0;
    int jobs = 1;
};

/// Full machine-readable analysis: summary, covers, independence, leaves,
/// tree certificate, grafting, primary decomposition, and the CM verdicts
/// (tree method when the complex is a tree, Reisner oracle on request).
Json analyze(const Complex& c, const AnalyzeOptions& options = {});

} // namespace facetideal
