#include "hubres/analysis.hpp"

#include <cmath>
#include <limits>

#include "hubres/graph6.hpp"
#include "hubres/util.hpp"

#include <json.hpp>

namespace hubres {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

nlohmann::ordered_json bounds_json(const std::vector<BoundRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["bound_id"] = r.id;
        row["lhs"] = std::isfinite(r.lower) ? nlohmann::ordered_json(round12(r.lower))
                                            : nlohmann::ordered_json("-inf");
        row["value"] = round12(r.value);
        row["rhs"] = std::isfinite(r.upper) ? nlohmann::ordered_json(round12(r.upper))
                                            : nlohmann::ordered_json("inf");
        row["pass"] = r.pass;
        row["tight"] = r.tight;
        arr.push_back(row);
    }
    return arr;
}

nlohmann::ordered_json metric_json(const MetricCheckReport& m) {
    nlohmann::ordered_json j;
    j["alpha"] = static_cast<int>(m.alpha);
    j["kind"] = kind_name(m.kind);
    j["negative_entries"] = m.negative_entries;
    j["asymmetric_pairs"] = m.asymmetric_pairs;
    j["indistinct_pairs"] = m.indistinct_pairs;
    j["triangle_violations"] = m.triangle_violations;
    j["sqrt_triangle_violations"] = m.sqrt_triangle_violations;
    j["min_gram_eigenvalue"] = round12(m.min_gram_eigenvalue);
    j["gram_psd"] = m.gram_psd;
    j["metric"] = m.metric;
    j["euclidean"] = m.euclidean;
    return j;
}

nlohmann::ordered_json conjecture_json_body(const ConjectureRecord& c) {
    nlohmann::ordered_json j;
    j["R_repelling"] = round12(c.triple.repelling);
    j["R_standard"] = round12(c.triple.standard);
    j["R_attracting"] = round12(c.triple.attracting);
    j["repelling_ge_standard"] = c.repelling_ge_standard;
    j["standard_ge_attracting"] = c.standard_ge_attracting;
    j["ordered"] = c.ordered;
    j["equal_rep_std"] = c.equal_rep_std;
    j["equal_std_att"] = c.equal_std_att;
    j["equal_triple"] = c.equal_triple;
    j["regular"] = c.regular;
    return j;
}
}  // namespace

AnalysisReport analyze_graph(const Graph& g, const std::string& source,
                             const std::vector<Bias>& biases, PseudoinverseKind kind) {
    AnalysisReport r;
    r.source = source;
    r.graph6 = g.order() <= 62 ? write_graph6(g) : "";
    r.stats = graph_stats(g);
    r.connected = r.stats.components == 1;
    r.biases = biases;
    r.kind = kind;

    for (Bias a : biases) {
        r.spectra.push_back(biased_spectrum(g, a));
        r.traces.push_back(build_laplacian(g, a).L.trace());
        r.volumes.push_back(volume(g, a));
        if (r.connected) {
            r.kirchhoff.push_back(kirchhoff_index(r.spectra.back()));
            r.walk_efficiencies.push_back(walk_efficiency(g, a));
            r.efficiencies.push_back(a == Bias::standard ? kNaN : relative_efficiency(g, a));
            r.metric_checks.push_back(metric_properties_report(g, a, kind));
            r.pair_surveys.push_back(resistance_bounds_survey(g, a, kind));
        } else {
            r.kirchhoff.push_back(kNaN);
            r.walk_efficiencies.push_back(kNaN);
            r.efficiencies.push_back(kNaN);
        }
    }

    r.trace_bounds = trace_bounds_report(g);
    if (r.connected) {
        for (Bias a : biases) {
            auto rows = eigen_bounds_report(g, a);
            for (auto& row : rows) row.id += "_" + bias_name(a);
            r.eigen_bounds.insert(r.eigen_bounds.end(), rows.begin(), rows.end());
        }
        r.kirchhoff_bounds = kirchhoff_bounds_report(g);
        r.conjecture = conjecture_check(g);
    }
    r.bound_violations = count_bound_violations(r.trace_bounds) +
                         count_bound_violations(r.eigen_bounds) +
                         count_bound_violations(r.kirchhoff_bounds);
    return r;
}

std::string analysis_to_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["source"] = r.source;
    j["graph6"] = r.graph6;

    nlohmann::ordered_json stats;
    stats["n"] = r.stats.n;
    stats["m"] = r.stats.m;
    stats["min_degree"] = r.stats.min_degree;
    stats["max_degree"] = r.stats.max_degree;
    stats["second_max_degree"] = r.stats.second_max_degree;
    stats["degree_square_sum"] = r.stats.degree_square_sum;
    stats["components"] = r.stats.components;
    stats["regular"] = r.stats.regular;
    if (r.stats.diameter) stats["diameter"] = *r.stats.diameter;
    if (r.stats.edge_connectivity) stats["edge_connectivity"] = *r.stats.edge_connectivity;
    int triangle_total = 0;
    for (int t : r.stats.triangles) triangle_total += t;
    stats["triangles"] = triangle_total / 3;
    j["stats"] = stats;
    j["connected"] = r.connected;
    j["kind"] = kind_name(r.kind);

    nlohmann::ordered_json per_bias = nlohmann::ordered_json::array();
    for (size_t i = 0; i < r.biases.size(); ++i) {
        nlohmann::ordered_json b;
        b["alpha"] = static_cast<int>(r.biases[i]);
        b["name"] = bias_name(r.biases[i]);
        b["trace"] = round12(r.traces[i]);
        b["volume"] = round12(r.volumes[i]);
        nlohmann::ordered_json eigs = nlohmann::ordered_json::array();
        for (Eigen::Index k = 0; k < r.spectra[i].rho.size(); ++k)
            eigs.push_back(round12(r.spectra[i].rho(k)));
        b["eigenvalues"] = eigs;
        b["zero_multiplicity"] = zero_multiplicity(r.spectra[i]);
        if (std::isfinite(r.kirchhoff[i])) b["kirchhoff"] = round12(r.kirchhoff[i]);
        if (std::isfinite(r.walk_efficiencies[i]))
            b["walk_efficiency"] = round12(r.walk_efficiencies[i]);
        if (std::isfinite(r.efficiencies[i]))
            b["relative_efficiency"] = round12(r.efficiencies[i]);
        per_bias.push_back(b);
    }
    j["bias"] = per_bias;

    nlohmann::ordered_json bounds;
    bounds["trace"] = bounds_json(r.trace_bounds);
    bounds["eigen"] = bounds_json(r.eigen_bounds);
    bounds["kirchhoff"] = bounds_json(r.kirchhoff_bounds);
    bounds["violations"] = r.bound_violations;
    j["bounds"] = bounds;

    if (!r.metric_checks.empty()) {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& m : r.metric_checks) checks.push_back(metric_json(m));
        j["metric_checks"] = checks;
    }
    if (!r.pair_surveys.empty()) {
        nlohmann::ordered_json surveys = nlohmann::ordered_json::array();
        for (const auto& s : r.pair_surveys) {
            nlohmann::ordered_json sj;
            sj["alpha"] = static_cast<int>(s.alpha);
            sj["kind"] = kind_name(s.kind);
            sj["pairs"] = s.pairs;
            sj["lower_violations"] = s.lower_violations;
            sj["upper_violations"] = s.upper_violations;
            sj["min_omega"] = round12(s.min_omega);
            sj["max_omega"] = round12(s.max_omega);
            surveys.push_back(sj);
        }
        j["pair_surveys"] = surveys;
    }
    if (r.connected) j["conjecture"] = conjecture_json_body(r.conjecture);
    return j.dump(2) + "\n";
}

std::string conjecture_to_json(const std::string& token, const ConjectureRecord& c) {
    nlohmann::ordered_json j;
    j[token] = conjecture_json_body(c);
    return j.dump(2) + "\n";
}

std::string commute_report_to_json(const CommuteReport& r) {
    nlohmann::ordered_json j;
    j["alpha"] = static_cast<int>(r.alpha);
    j["vol"] = round12(r.vol);
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const auto& p : r.pairs) {
        nlohmann::ordered_json pj;
        pj["v"] = p.v;
        pj["w"] = p.w;
        pj["exact"] = round12(p.exact);
        pj["predicted"] = round12(p.predicted);
        pj["ratio"] = round12(p.ratio);
        pairs.push_back(pj);
    }
    j["pairs"] = pairs;
    j["summary"] = {{"min", round12(r.min_ratio)},
                    {"mean", round12(r.mean_ratio)},
                    {"max", round12(r.max_ratio)}};
    return j.dump(2) + "\n";
}

}  // namespace hubres
