#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hubres/resistance.hpp"

namespace hubres {

// Everything the corpus sweep keeps per graph. `error` is empty on
// success; a failed graph keeps its row (numeric fields NaN,
// bound_violations -1) and never aborts the sweep.
struct SweepRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    bool regular = false;
    KirchhoffTriple kirchhoff{0, 0, 0};
    double efficiency_repelling = 0.0;   // E(+1)
    double efficiency_attracting = 0.0;  // E(-1)
    bool conjecture_ok = false;
    int bound_violations = -1;
    std::string error;
};

SweepRecord sweep_one(const Graph& g);

// Sweeps a corpus with `workers` threads; output order always matches
// input order regardless of scheduling.
std::vector<SweepRecord> run_sweep(const std::vector<std::string>& tokens, int workers = 1);

// Classification of a full sweep. Efficiencies are compared against 1 with
// 1e-9 absolute slack; near_boundary counts records within 1e-6 of 1 on
// either axis so boundary sensitivity is visible.
struct SweepSummary {
    std::int64_t total = 0;
    std::int64_t count_Eatt_gt1 = 0;
    std::int64_t count_Erep_gt1 = 0;
    std::int64_t count_both_lt1 = 0;
    std::int64_t count_both_eq1 = 0;
    std::int64_t conjecture_failures = 0;
    std::int64_t regular_graphs = 0;
    std::int64_t near_boundary = 0;
    std::int64_t errors = 0;
};

SweepSummary classify_sweep(const std::vector<SweepRecord>& records);

// Which column extremal_graphs ranks by.
enum class SweepMetric { kirchhoff_repelling, kirchhoff_attracting, efficiency_repelling, efficiency_attracting };

// Top-k records by the metric, descending when `maximum` (ascending
// otherwise), ties broken by graph6 token.
std::vector<SweepRecord> extremal_graphs(const std::vector<SweepRecord>& records,
                                         SweepMetric metric, int k, bool maximum);

// CSV with fixed header graph6,n,m,regular,R1,R0,Rm1,E1,Em1,conjecture_ok,violations
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

// Scatter-friendly CSV with header graph6,E_repelling,E_attracting
std::string efficiency_scatter_csv(const std::vector<SweepRecord>& records);

std::string summary_to_json(const SweepSummary& s);

}  // namespace hubres
