#pragma once

#include <string>
#include <vector>

#include "hubres/spectral.hpp"

namespace hubres {

// Which generalized inverse feeds the pairwise resistance formula. The
// group inverse K^a S^+ K^-a is the canonical choice; the other two exist
// for explicit comparison and are not interchangeable with it for a != 0.
enum class PseudoinverseKind { group_inverse, moore_penrose, spectral_formula };

std::string kind_name(PseudoinverseKind k);
PseudoinverseKind kind_from_name(const std::string& name);

struct ResistanceMatrix {
    Bias alpha;
    PseudoinverseKind kind;
    Matrix omega;
};

// Pairwise biased resistances of a connected graph.
//   group_inverse:     X = K^a S^+ K^-a,
//                      omega(v,w) = X_vv + X_ww - X_vw - X_wv
//                                 = S+_vv + S+_ww - ((kv/kw)^a + (kw/kv)^a) S+_vw
//   moore_penrose:     same combination on the Moore-Penrose inverse of L
//   spectral_formula:  sum over nonzero rho of (psi_v - psi_w)^2 / rho with
//                      psi the rows of K^a U
ResistanceMatrix resistance_matrix(const Graph& g, Bias a,
                                   PseudoinverseKind kind = PseudoinverseKind::group_inverse);

// n * sum of reciprocal nonzero eigenvalues; equals the half-sum of the
// group-inverse resistance matrix. Connected input required.
double kirchhoff_index(const Graph& g, Bias a);
double kirchhoff_index(const Spectrum& spec);

struct KirchhoffTriple {
    double repelling;   // a = +1
    double standard;    // a = 0
    double attracting;  // a = -1
};

KirchhoffTriple kirchhoff_triple(const Graph& g);

// Proved bounds on the Kirchhoff indices of a connected graph, one row set
// per bias:
//   kirchhoff_spectral_*    n(n-1)/rho_n <= R <= n(n-1)/rho_2
//   kirchhoff_complete_*    R >= n-1, equality exactly for complete graphs
//   kirchhoff_repelling_min R(+1) >= n(n-1) d/(2 D^2)
//   kirchhoff_attracting_min R(-1) >= n(n-1)/(2D)
// The repelling floor follows from the spectral ceiling rho_n <= 2D^2/d,
// so it carries the same factor two as the attracting one.
std::vector<BoundRow> kirchhoff_bounds_report(const Graph& g);

// Counts pairs violating 2/rho_n <= omega(v,w) <= 2/rho_2. The two-sided
// estimate is a theorem only for a = 0; for a = +/-1 it is surveyed, not
// asserted.
struct PairBoundSurvey {
    Bias alpha;
    PseudoinverseKind kind;
    int pairs = 0;
    int lower_violations = 0;
    int upper_violations = 0;
    double min_omega = 0.0;
    double max_omega = 0.0;
};

PairBoundSurvey resistance_bounds_survey(const Graph& g, Bias a,
                                         PseudoinverseKind kind = PseudoinverseKind::group_inverse);

// Distance-axiom checks on a resistance matrix: nonnegativity, symmetry,
// zero diagonal with positive off-diagonal, the triangle inequality for
// omega and sqrt(omega), and positive semidefiniteness of -1/2 C omega C
// (the Gram matrix of a squared Euclidean embedding).
struct MetricCheckReport {
    Bias alpha;
    PseudoinverseKind kind;
    int negative_entries = 0;
    int asymmetric_pairs = 0;
    int indistinct_pairs = 0;        // off-diagonal zeros
    int triangle_violations = 0;
    int sqrt_triangle_violations = 0;
    double min_gram_eigenvalue = 0.0;
    bool gram_psd = false;
    bool metric = false;
    bool euclidean = false;
};

MetricCheckReport metric_properties_report(const Graph& g, Bias a,
                                           PseudoinverseKind kind = PseudoinverseKind::group_inverse);

// The ordering R(+1) >= R(0) >= R(-1) with 1e-9 relative slack, plus
// equality flags at the same tolerance and whether the graph is regular
// (where equality is expected throughout).
struct ConjectureRecord {
    KirchhoffTriple triple;
    bool repelling_ge_standard = false;
    bool standard_ge_attracting = false;
    bool ordered = false;
    bool equal_rep_std = false;
    bool equal_std_att = false;
    bool equal_triple = false;
    bool regular = false;
};

ConjectureRecord conjecture_check(const Graph& g);

// "row,col,value" lines for the upper triangle of a resistance matrix.
std::string resistance_to_csv(const ResistanceMatrix& r);

}  // namespace hubres
