#pragma once

#include <string>
#include <vector>

#include "hubres/randomwalk.hpp"

namespace hubres {

// Full single-graph report: stats, per-bias spectra, Kirchhoff indices,
// walk efficiencies, every bounds table, metric checks, and the ordering
// record. Serialized as versioned JSON. `bound_violations` aggregates all
// tables; a nonzero count makes the CLI exit with its bound-violation code.
struct AnalysisReport {
    std::string source;
    std::string graph6;
    GraphStats stats;
    bool connected = false;
    std::vector<Bias> biases;
    PseudoinverseKind kind = PseudoinverseKind::group_inverse;
    std::vector<Spectrum> spectra;            // aligned with `biases`
    std::vector<double> traces;               // tr L per bias
    std::vector<double> volumes;              // per bias
    std::vector<double> kirchhoff;            // per bias; NaN when disconnected
    std::vector<double> efficiencies;         // E per bias (NaN for a=0/disconnected)
    std::vector<double> walk_efficiencies;    // epsilon per bias
    std::vector<BoundRow> trace_bounds;
    std::vector<BoundRow> eigen_bounds;       // all biases, ids suffixed
    std::vector<BoundRow> kirchhoff_bounds;
    std::vector<MetricCheckReport> metric_checks;
    std::vector<PairBoundSurvey> pair_surveys;
    ConjectureRecord conjecture;              // valid when connected
    int bound_violations = 0;
};

AnalysisReport analyze_graph(const Graph& g, const std::string& source,
                             const std::vector<Bias>& biases,
                             PseudoinverseKind kind = PseudoinverseKind::group_inverse);

std::string analysis_to_json(const AnalysisReport& r);

// {"<graph6>": {triple, flags...}} for one graph.
std::string conjecture_to_json(const std::string& token, const ConjectureRecord& c);

std::string commute_report_to_json(const CommuteReport& r);

}  // namespace hubres
