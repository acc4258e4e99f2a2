#pragma once

#include <stdexcept>
#include <vector>

#include "hubres/bounds.hpp"
#include "hubres/laplacian.hpp"

namespace hubres {

// Raised when an eigensolver or linear solve does not meet its accuracy
// contract; the command line maps it to its own exit code.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigenvalues (ascending) and orthonormal eigenvectors (columns of U) of a
// symmetric matrix. For a biased spectrum the values are shared with the
// non-symmetric L of the same bias; eigenvectors of L are K^a U.
struct Spectrum {
    Bias alpha = Bias::standard;
    Vector rho;
    Matrix U;
};

// Eigenvalues below 1e-10 * n * rho_max count as zero.
double zero_threshold(const Spectrum& s);
int zero_multiplicity(const Spectrum& s);

// Full symmetric eigendecomposition. Throws std::invalid_argument when the
// input is not symmetric within 1e-12 relative, numerical_error if the
// solver fails to converge.
Spectrum sym_eigen(const Matrix& s);

// Spectrum of the biased Laplacian via its symmetric similar form.
Spectrum biased_spectrum(const Graph& g, Bias a);

// Eigenvectors of the non-symmetric L: column v of K^a U.
Matrix biased_eigenvectors(const Graph& g, const Spectrum& spec);

// U rho^+ U^T, zeroing eigenvalues below the zero threshold.
Matrix spectral_pseudoinverse(const Spectrum& spec);

// Group inverse of the biased Laplacian, K^a S^+ K^-a. Connected input
// required (std::invalid_argument otherwise). Satisfies L X L = L,
// X L X = X, L X = X L, and X 1 = 0.
Matrix group_inverse(const Graph& g, Bias a);
Matrix group_inverse(const Graph& g, const Spectrum& spec);

// Moore-Penrose pseudoinverse by singular value decomposition, truncating
// singular values below 1e-10 * n * sigma_max. Works for any matrix; for
// the non-symmetric L it generally differs from the group inverse.
Matrix moore_penrose(const Matrix& m);

// Spectrum of K^-1/2 L_0 K^-1/2; eigenvalues lie in [0, 2].
Spectrum normalized_laplacian_spectrum(const Graph& g);

// Eigenvalue bounds for the biased spectrum of a connected graph:
//   rho_max_lower_mean       rho_n >= 4m^2 / (n(n-1)D)
//   rho_max_gersgorin        rho_n <= 2D (a<=0) or 2D^2/d (a=+1)
//   rho_max_lower_refined    rho_n >= D/(n-1) + (2m-D)^2/(D(n-1)^2)
//                                     + 2(n-2)(D2-d)^2/(D(n-1)^3)
//   rho2_upper_extremal      rho_2 <= 2m(2m+(n-1)(D-d))/(d(n-1)(n+D-d))
//   rho2_upper_degree        rho_2 <= 2mD/((n-1)d)
//   rho2_upper_refined       rho_2 <= ((n+1)m - D(n-D))/(d(n-1))
//                                     + 2(m-D)^2/(d(n-2)(n-1)),  n >= 3 only
//   rho2_lower_algebraic     rho_2 >= (d/D) rho_2(L_0)  (a <= 0 only; false
//                                     for a = +1, e.g. on the 4-path)
//   fiedler_edge             rho_2(L_0) >= 2 eta (1 - cos(pi/n))
//   normalized_diameter      rho_2(norm) >= 1/(diam * n)
//   normalized_gap           rho_2(norm) >= 1 - cos(pi/m)
// (D = max degree, d = min degree, D2 = second largest degree.)
std::vector<BoundRow> eigen_bounds_report(const Graph& g, Bias a);

}  // namespace hubres
