#include "hubres/laplacian.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hubres/util.hpp"

namespace hubres {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelTol = 1e-9;

bool leq(double a, double b) {
    if (a == -kInf || b == kInf) return true;
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return a <= b + kRelTol * scale;
}

bool close(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return false;
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= kRelTol * scale;
}
}  // namespace

BoundRow make_bound_row(std::string id, double lower, double value, double upper) {
    BoundRow row{std::move(id), lower, value, upper, false, false};
    row.pass = leq(lower, value) && leq(value, upper);
    row.tight = close(lower, value) || close(value, upper);
    return row;
}

namespace {
std::string fmt_bound(double x) {
    if (x == kInf) return "inf";
    if (x == -kInf) return "-inf";
    return fmt12(x);
}
}  // namespace

std::string bounds_to_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "bound_id,lhs,value,rhs,pass,tight\n";
    for (const auto& r : rows) {
        out << r.id << ',' << fmt_bound(r.lower) << ',' << fmt_bound(r.value) << ','
            << fmt_bound(r.upper) << ',' << (r.pass ? 1 : 0) << ',' << (r.tight ? 1 : 0) << '\n';
    }
    return out.str();
}

int count_bound_violations(const std::vector<BoundRow>& rows) {
    int bad = 0;
    for (const auto& r : rows)
        if (!r.pass) ++bad;
    return bad;
}

Bias bias_from_int(int a) {
    switch (a) {
        case -1: return Bias::attracting;
        case 0: return Bias::standard;
        case +1: return Bias::repelling;
    }
    throw std::invalid_argument("bias must be -1, 0 or +1, got " + std::to_string(a));
}

std::string bias_name(Bias a) {
    switch (a) {
        case Bias::attracting: return "attracting";
        case Bias::standard: return "standard";
        case Bias::repelling: return "repelling";
    }
    return "?";
}

double conductance(const Graph& g, Bias a, int v, int w) {
    if (!g.adjacent(v, w))
        throw std::invalid_argument("conductance is defined on edges only; (" +
                                    std::to_string(v) + "," + std::to_string(w) +
                                    ") is not an edge");
    const double r = static_cast<double>(g.degree(v)) / g.degree(w);
    return std::pow(r, bias_exponent(a));
}

double total_conductance(const Graph& g, Bias a, int v) {
    double sum = 0.0;
    for (int w : g.neighbors(v)) sum += conductance(g, a, v, w);
    return sum;
}

LaplacianBundle build_laplacian(const Graph& g, Bias a) {
    const int n = g.order();
    LaplacianBundle b;
    b.alpha = a;
    b.degrees = g.degree_vector();
    b.xi = Vector::Zero(n);
    b.L = Matrix::Zero(n, n);
    b.S = Matrix::Zero(n, n);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) {
            const double c = conductance(g, a, v, w);
            b.xi(v) += c;
            b.L(v, w) = -c;
            b.S(v, w) = -1.0;
        }
        b.L(v, v) = b.xi(v);
        b.S(v, v) = b.xi(v);
    }
    return b;
}

double hubs_trace(const Graph& g) {
    double t = 0.0;
    for (auto [v, w] : g.edges()) {
        const double kv = g.degree(v), kw = g.degree(w);
        t += kv / kw + kw / kv;
    }
    return t;
}

std::vector<BoundRow> trace_bounds_report(const Graph& g) {
    const GraphStats s = graph_stats(g);
    const double t = hubs_trace(g);
    const double n = s.n, m = s.m, d = s.min_degree, D = s.max_degree;
    const double Z = s.degree_square_sum;

    std::vector<BoundRow> rows;
    rows.push_back(make_bound_row("trace_degree", 2.0 * m * d / D, t, 2.0 * m * D / d));
    rows.push_back(make_bound_row("trace_zagreb", Z / D, t, Z / d));
    rows.push_back(make_bound_row("trace_zagreb_extremal", 4.0 * m * m / (n * D), t,
                                  2.0 * m * (2.0 * m + (n - 1.0) * (D - d)) /
                                      (d * (n + D - d))));

    double lo_nb = 0.0, hi_nb = 0.0, lo_deg = 0.0, hi_deg = 0.0, cubic = 0.0;
    for (int v = 0; v < s.n; ++v) {
        const double kv = g.degree(v);
        const double mn = s.min_neighbor_degree[v], mx = s.max_neighbor_degree[v];
        lo_nb += kv * kv / mx;
        hi_nb += kv * kv / mn;
        lo_deg += mn;
        hi_deg += mx;
        double nbsum = 0.0;
        for (int w : g.neighbors(v)) nbsum += g.degree(w);
        cubic += kv * kv * kv / nbsum;
    }
    rows.push_back(make_bound_row("trace_neighborhood_zagreb", lo_nb, t, hi_nb));
    rows.push_back(make_bound_row("trace_neighborhood_degree", lo_deg, t, hi_deg));
    rows.push_back(make_bound_row("trace_cubic", cubic, t, kInf));
    return rows;
}

}  // namespace hubres
