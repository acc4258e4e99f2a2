#pragma once

#include <cstdint>
#include <vector>

#include "hubres/resistance.hpp"

namespace hubres {

// Row-stochastic transition matrix of the degree-biased walk:
// P(v,w) = c(v,w) / c(v) on edges, 0 elsewhere.
struct TransitionMatrix {
    Bias alpha;
    Matrix P;
};

TransitionMatrix transition_matrix(const Graph& g, Bias a);

// Expected steps to first reach `target` from every start vertex, by
// Gaussian elimination with partial pivoting on (I - P restricted away from
// the target). Connected input required; entry at `target` is 0.
Vector exact_hitting_times(const Graph& g, Bias a, int target);

// Expected round trip v -> w -> v.
double exact_commute_time(const Graph& g, Bias a, int v, int w);

// Monte Carlo estimate of the hitting time v -> w. Each trial draws its
// random stream from (seed, trial index) only, so estimates are independent
// of scheduling and reproducible. Walks longer than step_cap are censored:
// excluded from the mean and counted. Throws numerical_error if every trial
// is censored.
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
    std::int64_t censored = 0;
};

McEstimate mc_hitting_time(const Graph& g, Bias a, int v, int w, std::int64_t trials,
                           std::uint64_t seed, std::int64_t step_cap = 1000000);

// Total conductance of the biased walk: sum over v of c(v). Equals 2m for
// the unbiased walk and hubs_trace(g) for either biased one.
double volume(const Graph& g, Bias a);

// Inverse cost of the walk: 1 / (vol * 2 * Kirchhoff index), using the
// ordered-pair resistance sum. Defined for all three biases.
double walk_efficiency(const Graph& g, Bias a);

// Efficiency of the biased walk relative to the unbiased one on the same
// graph: (vol_0 / vol_a) * (R_0 / R_a). Only a = +/-1 is meaningful;
// equals 1 on regular graphs.
double relative_efficiency(const Graph& g, Bias a);

// Exact commute times against the prediction vol * omega for every pair.
// The identity commute = vol * omega is asserted (1e-8 relative) for the
// unbiased walk only; for a = +/-1 the ratio is reported instead.
struct CommutePair {
    int v;
    int w;
    double exact;
    double predicted;
    double ratio;
};

struct CommuteReport {
    Bias alpha;
    double vol;
    std::vector<CommutePair> pairs;
    double min_ratio;
    double mean_ratio;
    double max_ratio;
};

CommuteReport commute_identity_report(const Graph& g, Bias a);

}  // namespace hubres
