#include "hubres/resistance.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hubres/util.hpp"

namespace hubres {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

bool ge_slack(double a, double b) {
    return a >= b - 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

bool eq_slack(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace

std::string kind_name(PseudoinverseKind k) {
    switch (k) {
        case PseudoinverseKind::group_inverse: return "group_inverse";
        case PseudoinverseKind::moore_penrose: return "moore_penrose";
        case PseudoinverseKind::spectral_formula: return "spectral_formula";
    }
    return "?";
}

PseudoinverseKind kind_from_name(const std::string& name) {
    if (name == "group_inverse" || name == "group") return PseudoinverseKind::group_inverse;
    if (name == "moore_penrose" || name == "mp") return PseudoinverseKind::moore_penrose;
    if (name == "spectral_formula" || name == "spectral")
        return PseudoinverseKind::spectral_formula;
    throw std::invalid_argument("unknown pseudoinverse kind: " + name);
}

ResistanceMatrix resistance_matrix(const Graph& g, Bias a, PseudoinverseKind kind) {
    if (!is_connected(g))
        throw std::invalid_argument("resistance matrix requires a connected graph");
    const int n = g.order();
    const double ax = bias_exponent(a);
    ResistanceMatrix r{a, kind, Matrix::Zero(n, n)};

    if (kind == PseudoinverseKind::moore_penrose) {
        const Matrix plus = moore_penrose(build_laplacian(g, a).L);
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                const double val = plus(v, v) + plus(w, w) - plus(v, w) - plus(w, v);
                r.omega(v, w) = val;
                r.omega(w, v) = val;
            }
        return r;
    }

    const Spectrum spec = biased_spectrum(g, a);
    if (kind == PseudoinverseKind::group_inverse) {
        const Matrix splus = spectral_pseudoinverse(spec);
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                const double ratio = std::pow(static_cast<double>(g.degree(v)) / g.degree(w), ax);
                const double val =
                    splus(v, v) + splus(w, w) - (ratio + 1.0 / ratio) * splus(v, w);
                r.omega(v, w) = val;
                r.omega(w, v) = val;
            }
        return r;
    }

    // Spectral formula on the rows of K^a U.
    const Matrix psi = biased_eigenvectors(g, spec);
    const double tol = zero_threshold(spec);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            double val = 0.0;
            for (int k = 0; k < n; ++k) {
                if (std::abs(spec.rho(k)) <= tol) continue;
                const double diff = psi(v, k) - psi(w, k);
                val += diff * diff / spec.rho(k);
            }
            r.omega(v, w) = val;
            r.omega(w, v) = val;
        }
    return r;
}

double kirchhoff_index(const Spectrum& spec) {
    const double tol = zero_threshold(spec);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < spec.rho.size(); ++i)
        if (std::abs(spec.rho(i)) > tol) sum += 1.0 / spec.rho(i);
    return static_cast<double>(spec.rho.size()) * sum;
}

double kirchhoff_index(const Graph& g, Bias a) {
    if (!is_connected(g))
        throw std::invalid_argument("Kirchhoff index requires a connected graph");
    return kirchhoff_index(biased_spectrum(g, a));
}

KirchhoffTriple kirchhoff_triple(const Graph& g) {
    return {kirchhoff_index(g, Bias::repelling), kirchhoff_index(g, Bias::standard),
            kirchhoff_index(g, Bias::attracting)};
}

std::vector<BoundRow> kirchhoff_bounds_report(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("Kirchhoff bounds require a connected graph");
    const double n = g.order();
    const GraphStats s = graph_stats(g);
    const double d = s.min_degree, D = s.max_degree;

    std::vector<BoundRow> rows;
    for (Bias a : kAllBiases) {
        const Spectrum spec = biased_spectrum(g, a);
        const double R = kirchhoff_index(spec);
        const double rho2 = spec.rho(1), rho_max = spec.rho(spec.rho.size() - 1);
        rows.push_back(make_bound_row("kirchhoff_spectral_" + bias_name(a),
                                      n * (n - 1.0) / rho_max, R, n * (n - 1.0) / rho2));
        rows.push_back(make_bound_row("kirchhoff_complete_" + bias_name(a), n - 1.0, R, kInf));
        if (a == Bias::repelling)
            rows.push_back(make_bound_row("kirchhoff_repelling_min",
                                          n * (n - 1.0) * d / (2.0 * D * D), R, kInf));
        if (a == Bias::attracting)
            rows.push_back(
                make_bound_row("kirchhoff_attracting_min", n * (n - 1.0) / (2.0 * D), R, kInf));
    }
    return rows;
}

PairBoundSurvey resistance_bounds_survey(const Graph& g, Bias a, PseudoinverseKind kind) {
    const Spectrum spec = biased_spectrum(g, a);
    const ResistanceMatrix r = resistance_matrix(g, a, kind);
    const double lo = 2.0 / spec.rho(spec.rho.size() - 1);
    const double hi = 2.0 / spec.rho(1);
    PairBoundSurvey survey;
    survey.alpha = a;
    survey.kind = kind;
    survey.min_omega = kInf;
    survey.max_omega = -kInf;
    const double tol = 1e-9;
    for (int v = 0; v < g.order(); ++v)
        for (int w = v + 1; w < g.order(); ++w) {
            const double val = r.omega(v, w);
            ++survey.pairs;
            survey.min_omega = std::min(survey.min_omega, val);
            survey.max_omega = std::max(survey.max_omega, val);
            if (val < lo - tol * std::max(1.0, std::abs(lo))) ++survey.lower_violations;
            if (val > hi + tol * std::max(1.0, std::abs(hi))) ++survey.upper_violations;
        }
    return survey;
}

MetricCheckReport metric_properties_report(const Graph& g, Bias a, PseudoinverseKind kind) {
    const ResistanceMatrix r = resistance_matrix(g, a, kind);
    const int n = g.order();
    const double scale = std::max(1.0, r.omega.cwiseAbs().maxCoeff());
    const double zero_tol = 1e-12 * scale;
    const double tri_tol = 1e-9 * scale;

    MetricCheckReport report;
    report.alpha = a;
    report.kind = kind;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            if (r.omega(v, w) < -zero_tol) ++report.negative_entries;
            if (std::abs(r.omega(v, w) - r.omega(w, v)) > zero_tol) ++report.asymmetric_pairs;
            if (std::abs(r.omega(v, w)) <= zero_tol) ++report.indistinct_pairs;
        }
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                if (r.omega(i, k) > r.omega(i, j) + r.omega(j, k) + tri_tol)
                    ++report.triangle_violations;
                const double sik = std::sqrt(std::max(0.0, r.omega(i, k)));
                const double sij = std::sqrt(std::max(0.0, r.omega(i, j)));
                const double sjk = std::sqrt(std::max(0.0, r.omega(j, k)));
                if (sik > sij + sjk + tri_tol) ++report.sqrt_triangle_violations;
            }

    const Matrix centering = Matrix::Identity(n, n) - Matrix::Constant(n, n, 1.0 / n);
    const Matrix gram = -0.5 * centering * r.omega * centering;
    report.min_gram_eigenvalue = sym_eigen(0.5 * (gram + gram.transpose())).rho(0);
    report.gram_psd = report.min_gram_eigenvalue >= -1e-9 * scale;
    report.metric = report.negative_entries == 0 && report.asymmetric_pairs == 0 &&
                    report.indistinct_pairs == 0 && report.triangle_violations == 0;
    report.euclidean = report.gram_psd;
    return report;
}

ConjectureRecord conjecture_check(const Graph& g) {
    ConjectureRecord c;
    c.triple = kirchhoff_triple(g);
    c.repelling_ge_standard = ge_slack(c.triple.repelling, c.triple.standard);
    c.standard_ge_attracting = ge_slack(c.triple.standard, c.triple.attracting);
    c.ordered = c.repelling_ge_standard && c.standard_ge_attracting;
    c.equal_rep_std = eq_slack(c.triple.repelling, c.triple.standard);
    c.equal_std_att = eq_slack(c.triple.standard, c.triple.attracting);
    c.equal_triple = c.equal_rep_std && c.equal_std_att;
    c.regular = g.is_regular();
    return c;
}

std::string resistance_to_csv(const ResistanceMatrix& r) {
    std::ostringstream out;
    out << "row,col,value\n";
    for (int v = 0; v < r.omega.rows(); ++v)
        for (int w = v + 1; w < r.omega.cols(); ++w)
            out << v << ',' << w << ',' << fmt12(r.omega(v, w)) << '\n';
    return out.str();
}

}  // namespace hubres
