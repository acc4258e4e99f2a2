#include "hubres/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "hubres/graph6.hpp"
#include "hubres/randomwalk.hpp"
#include "hubres/util.hpp"

#include <json.hpp>

namespace hubres {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEqTol = 1e-9;   // absolute band around E = 1
constexpr double kNearTol = 1e-6;
}  // namespace

SweepRecord sweep_one(const Graph& g) {
    SweepRecord rec;
    rec.graph6 = write_graph6(g);
    rec.n = g.order();
    rec.m = g.size();
    rec.regular = g.is_regular();
    try {
        const ConjectureRecord c = conjecture_check(g);
        rec.kirchhoff = c.triple;
        rec.conjecture_ok = c.ordered;
        rec.efficiency_repelling = relative_efficiency(g, Bias::repelling);
        rec.efficiency_attracting = relative_efficiency(g, Bias::attracting);
        int violations = count_bound_violations(trace_bounds_report(g));
        for (Bias a : kAllBiases) violations += count_bound_violations(eigen_bounds_report(g, a));
        violations += count_bound_violations(kirchhoff_bounds_report(g));
        rec.bound_violations = violations;
    } catch (const std::exception& e) {
        rec.kirchhoff = {kNaN, kNaN, kNaN};
        rec.efficiency_repelling = kNaN;
        rec.efficiency_attracting = kNaN;
        rec.conjecture_ok = false;
        rec.bound_violations = -1;
        rec.error = e.what();
    }
    return rec;
}

std::vector<SweepRecord> run_sweep(const std::vector<std::string>& tokens, int workers) {
    std::vector<SweepRecord> records(tokens.size());
    if (workers < 1) workers = 1;
    std::atomic<size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= tokens.size()) return;
            try {
                records[i] = sweep_one(parse_graph6(tokens[i]));
            } catch (const std::exception& e) {
                records[i].graph6 = tokens[i];
                records[i].error = e.what();
                records[i].kirchhoff = {kNaN, kNaN, kNaN};
                records[i].efficiency_repelling = kNaN;
                records[i].efficiency_attracting = kNaN;
                records[i].bound_violations = -1;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return records;
}

SweepSummary classify_sweep(const std::vector<SweepRecord>& records) {
    SweepSummary s;
    s.total = static_cast<std::int64_t>(records.size());
    for (const auto& r : records) {
        if (!r.error.empty()) {
            ++s.errors;
            continue;
        }
        const double e1 = r.efficiency_repelling, em1 = r.efficiency_attracting;
        const bool rep_gt = e1 > 1.0 + kEqTol;
        const bool rep_lt = e1 < 1.0 - kEqTol;
        const bool att_gt = em1 > 1.0 + kEqTol;
        const bool att_lt = em1 < 1.0 - kEqTol;
        if (att_gt) ++s.count_Eatt_gt1;
        if (rep_gt) ++s.count_Erep_gt1;
        if (rep_lt && att_lt) ++s.count_both_lt1;
        if (!rep_gt && !rep_lt && !att_gt && !att_lt) ++s.count_both_eq1;
        if (!r.conjecture_ok) ++s.conjecture_failures;
        if (r.regular) ++s.regular_graphs;
        if (std::abs(e1 - 1.0) < kNearTol || std::abs(em1 - 1.0) < kNearTol) ++s.near_boundary;
    }
    return s;
}

namespace {
double metric_value(const SweepRecord& r, SweepMetric m) {
    switch (m) {
        case SweepMetric::kirchhoff_repelling: return r.kirchhoff.repelling;
        case SweepMetric::kirchhoff_attracting: return r.kirchhoff.attracting;
        case SweepMetric::efficiency_repelling: return r.efficiency_repelling;
        case SweepMetric::efficiency_attracting: return r.efficiency_attracting;
    }
    return 0.0;
}
}  // namespace

std::vector<SweepRecord> extremal_graphs(const std::vector<SweepRecord>& records,
                                         SweepMetric metric, int k, bool maximum) {
    std::vector<SweepRecord> sorted;
    sorted.reserve(records.size());
    for (const auto& r : records)
        if (r.error.empty() && std::isfinite(metric_value(r, metric))) sorted.push_back(r);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const SweepRecord& a, const SweepRecord& b) {
                         const double va = metric_value(a, metric), vb = metric_value(b, metric);
                         if (va != vb) return maximum ? va > vb : va < vb;
                         return a.graph6 < b.graph6;
                     });
    if (static_cast<int>(sorted.size()) > k) sorted.resize(k);
    return sorted;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "graph6,n,m,regular,R1,R0,Rm1,E1,Em1,conjecture_ok,violations\n";
    for (const auto& r : records) {
        out << r.graph6 << ',' << r.n << ',' << r.m << ',' << (r.regular ? 1 : 0) << ','
            << fmt12(r.kirchhoff.repelling) << ',' << fmt12(r.kirchhoff.standard) << ','
            << fmt12(r.kirchhoff.attracting) << ',' << fmt12(r.efficiency_repelling) << ','
            << fmt12(r.efficiency_attracting) << ',' << (r.conjecture_ok ? 1 : 0) << ','
            << r.bound_violations << '\n';
    }
    return out.str();
}

std::string efficiency_scatter_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "graph6,E_repelling,E_attracting\n";
    for (const auto& r : records)
        out << r.graph6 << ',' << fmt12(r.efficiency_repelling) << ','
            << fmt12(r.efficiency_attracting) << '\n';
    return out.str();
}

std::string summary_to_json(const SweepSummary& s) {
    nlohmann::ordered_json j;
    j["total"] = s.total;
    j["count_Eatt_gt1"] = s.count_Eatt_gt1;
    j["count_Erep_gt1"] = s.count_Erep_gt1;
    j["count_both_lt1"] = s.count_both_lt1;
    j["count_both_eq1"] = s.count_both_eq1;
    j["conjecture_failures"] = s.conjecture_failures;
    j["regular_graphs"] = s.regular_graphs;
    j["near_boundary"] = s.near_boundary;
    j["errors"] = s.errors;
    return j.dump(2) + "\n";
}

}  // namespace hubres
