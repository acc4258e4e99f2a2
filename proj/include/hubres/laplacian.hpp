#pragma once

#include <string>
#include <vector>

#include "hubres/bounds.hpp"
#include "hubres/graph.hpp"

namespace hubres {

// Degree-bias direction for the walk conductances c(v,w) = (k_v/k_w)^a.
// a = +1 makes hubs repel the walker, a = -1 makes them attract it, a = 0
// is the ordinary unbiased walk. Only these three values are meaningful
// here, hence an enum rather than a free real parameter.
enum class Bias : int { attracting = -1, standard = 0, repelling = +1 };

inline double bias_exponent(Bias a) { return static_cast<double>(static_cast<int>(a)); }
Bias bias_from_int(int a);
std::string bias_name(Bias a);  // "repelling" / "standard" / "attracting"

inline constexpr Bias kAllBiases[] = {Bias::repelling, Bias::standard, Bias::attracting};

// Directed conductance (k_v/k_w)^a of the edge v->w.
// Throws std::invalid_argument unless v and w are adjacent.
double conductance(const Graph& g, Bias a, int v, int w);

// Total conductance leaving v: sum of conductance(v,w) over neighbors w.
double total_conductance(const Graph& g, Bias a, int v);

// The degree-biased Laplacian L = Xi - K^a A K^-a together with the
// symmetric form S = Xi - A it is similar to (L = K^a S K^-a). Xi is the
// diagonal of total conductances; K the diagonal of degrees.
struct LaplacianBundle {
    Bias alpha;
    Matrix L;
    Matrix S;
    Vector xi;
    Vector degrees;
};

LaplacianBundle build_laplacian(const Graph& g, Bias a);

// tr(L) for a = +1 (equal to a = -1): sum over ordered adjacent pairs of
// k_v/k_w.
double hubs_trace(const Graph& g);

// Closed-form bounds on hubs_trace from degree data alone:
//   trace_degree              2m d/D <= t <= 2m D/d
//   trace_zagreb              Z/D <= t <= Z/d            (Z = sum of k^2)
//   trace_zagreb_extremal     4m^2/(nD) <= t <= 2m(2m+(n-1)(D-d))/(d(n+D-d))
//   trace_neighborhood_zagreb sum k_v^2/max_N <= t <= sum k_v^2/min_N
//   trace_neighborhood_degree sum min_N <= t <= sum max_N
//   trace_cubic               t >= sum k_v^3 / (sum of neighbor degrees)
std::vector<BoundRow> trace_bounds_report(const Graph& g);

}  // namespace hubres
