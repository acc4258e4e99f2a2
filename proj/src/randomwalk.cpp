#include "hubres/randomwalk.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>

#include "hubres/util.hpp"

namespace hubres {

TransitionMatrix transition_matrix(const Graph& g, Bias a) {
    const int n = g.order();
    TransitionMatrix t{a, Matrix::Zero(n, n)};
    for (int v = 0; v < n; ++v) {
        const double total = total_conductance(g, a, v);
        for (int w : g.neighbors(v)) t.P(v, w) = conductance(g, a, v, w) / total;
    }
    return t;
}

Vector exact_hitting_times(const Graph& g, Bias a, int target) {
    if (!is_connected(g))
        throw std::invalid_argument("hitting times require a connected graph");
    if (target < 0 || target >= g.order())
        throw std::invalid_argument("hitting-time target out of range");
    const int n = g.order();
    const Matrix P = transition_matrix(g, a).P;

    // (I - Q) h = 1 over the non-target vertices, Q the restriction of P.
    Matrix A = Matrix::Identity(n - 1, n - 1);
    std::vector<int> keep;
    keep.reserve(n - 1);
    for (int v = 0; v < n; ++v)
        if (v != target) keep.push_back(v);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) A(i, j) -= P(keep[i], keep[j]);
    const Vector b = Vector::Ones(n - 1);
    Eigen::PartialPivLU<Matrix> lu(A);
    const Vector x = lu.solve(b);
    const double residual = (A * x - b).cwiseAbs().maxCoeff();
    if (!x.allFinite() || residual > 1e-10 * std::max(1.0, x.cwiseAbs().maxCoeff()))
        throw numerical_error("hitting-time solve residual too large");

    Vector h = Vector::Zero(n);
    for (int i = 0; i < n - 1; ++i) h(keep[i]) = x(i);
    return h;
}

double exact_commute_time(const Graph& g, Bias a, int v, int w) {
    return exact_hitting_times(g, a, w)(v) + exact_hitting_times(g, a, v)(w);
}

McEstimate mc_hitting_time(const Graph& g, Bias a, int v, int w, std::int64_t trials,
                           std::uint64_t seed, std::int64_t step_cap) {
    if (!is_connected(g))
        throw std::invalid_argument("hitting times require a connected graph");
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    const int n = g.order();

    // Per-vertex neighbor cumulative conductances for inverse-CDF sampling.
    std::vector<std::vector<double>> cumulative(n);
    for (int u = 0; u < n; ++u) {
        double run = 0.0;
        for (int x : g.neighbors(u)) {
            run += conductance(g, a, u, x);
            cumulative[u].push_back(run);
        }
    }

    McEstimate est;
    est.trials = trials;
    double sum = 0.0, sumsq = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = trial_stream(seed, static_cast<std::uint64_t>(t));
        int at = v;
        std::int64_t steps = 0;
        while (at != w && steps < step_cap) {
            const auto& cum = cumulative[at];
            const double draw = rng.next_double() * cum.back();
            size_t pick = 0;
            while (pick + 1 < cum.size() && draw >= cum[pick]) ++pick;
            at = g.neighbors(at)[pick];
            ++steps;
        }
        if (at != w) {
            ++est.censored;
            continue;
        }
        sum += static_cast<double>(steps);
        sumsq += static_cast<double>(steps) * static_cast<double>(steps);
    }
    const std::int64_t done = trials - est.censored;
    if (done == 0) throw numerical_error("every Monte Carlo trial hit the step cap");
    est.mean = sum / static_cast<double>(done);
    if (done > 1) {
        const double var =
            (sumsq - sum * sum / static_cast<double>(done)) / static_cast<double>(done - 1);
        est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(done));
    }
    return est;
}

double volume(const Graph& g, Bias a) {
    double vol = 0.0;
    for (int v = 0; v < g.order(); ++v) vol += total_conductance(g, a, v);
    return vol;
}

double walk_efficiency(const Graph& g, Bias a) {
    return 1.0 / (volume(g, a) * 2.0 * kirchhoff_index(g, a));
}

double relative_efficiency(const Graph& g, Bias a) {
    if (a == Bias::standard)
        throw std::invalid_argument("relative efficiency compares a biased walk against the "
                                    "unbiased one; use a = +1 or -1");
    const double vol0 = volume(g, Bias::standard);
    const double r0 = kirchhoff_index(g, Bias::standard);
    return (vol0 / volume(g, a)) * (r0 / kirchhoff_index(g, a));
}

CommuteReport commute_identity_report(const Graph& g, Bias a) {
    const int n = g.order();
    const double vol = volume(g, a);
    const ResistanceMatrix r = resistance_matrix(g, a, PseudoinverseKind::group_inverse);

    // One linear solve per target covers all pairs.
    std::vector<Vector> hit(n);
    for (int t = 0; t < n; ++t) hit[t] = exact_hitting_times(g, a, t);

    CommuteReport report;
    report.alpha = a;
    report.vol = vol;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            CommutePair p{v, w, hit[w](v) + hit[v](w), vol * r.omega(v, w), 0.0};
            p.ratio = p.exact / p.predicted;
            if (a == Bias::standard &&
                std::abs(p.exact - p.predicted) > 1e-8 * std::max(1.0, std::abs(p.exact)))
                throw numerical_error("commute identity violated for the unbiased walk");
            lo = std::min(lo, p.ratio);
            hi = std::max(hi, p.ratio);
            sum += p.ratio;
            report.pairs.push_back(p);
        }
    report.min_ratio = lo;
    report.max_ratio = hi;
    report.mean_ratio = sum / static_cast<double>(report.pairs.size());
    return report;
}

}  // namespace hubres
