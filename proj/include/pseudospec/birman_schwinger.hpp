#pragma once

// Nystrom discretisation of K_z = |V|^{1/2} (H - z)^{-1} V_{1/2}, where
// V_{1/2} = |V|^{1/2} e^{i arg V}. A point z off the spectrum is an
// eigenvalue of H + eps V exactly when -1 is an eigenvalue of eps K_z.

#include <optional>
#include <string>
#include <vector>

#include "pseudospec/linalg.hpp"
#include "pseudospec/potential.hpp"
#include "pseudospec/quadrature.hpp"
#include "pseudospec/spectral_kernel.hpp"

namespace pseudospec {

enum class KernelKind {
  kFull,       // resolvent of H
  kDirichlet,  // resolvent of the Dirichlet-split operator
};

struct BSGridOptions {
  int order = 10;
  double panels_per_wavelength = 2.0;  // wavelength 2 pi / max(|k+-|, 1)
  double max_panel_width = 0.5;
  std::size_t max_nodes = 8000;
};

/// Composite Gauss-Legendre grid over the support of V with breakpoints at
/// the support ends and at every jump of V, resolving the oscillation of R_z
/// for all |z| <= z_scale. ConfigError if max_nodes would be exceeded.
QuadratureGrid bs_grid(const PotentialSpec& v, double z_scale, const BSGridOptions& options = {});

struct NystromOperator {
  Complex z;
  QuadratureGrid grid;
  /// sqrt(w_i) |V|^{1/2}(x_i) R_z(x_i, x_j) V_{1/2}(x_j) sqrt(w_j)
  Matrix matrix;
};

/// Plain symmetric-weight Nystrom matrix. SpectrumError on the rays;
/// ConfigError if the grid does not cover the support of V.
NystromOperator assemble_K(Complex z, const PotentialSpec& v, const QuadratureGrid& grid,
                           KernelKind kind = KernelKind::kFull);

/// Nystrom matrix with the diagonal panel integrated exactly against the
/// Lagrange basis, so the kink of R_z at x = y costs no accuracy. Used for
/// eigenvalues and determinants.
Matrix assemble_K_corrected(Complex z, const PotentialSpec& v, const QuadratureGrid& grid,
                            KernelKind kind = KernelKind::kFull);

/// Frobenius norm of the plain Nystrom matrix, accumulated without storing it.
double hs_norm(Complex z, const PotentialSpec& v, const QuadratureGrid& grid,
               KernelKind kind = KernelKind::kFull);

/// Closed-form bound sup |R_z(x, y)| <= 1/|k+ + k-| + 1/min(|k+|, |k-|).
double kernel_sup_bound(Complex z);

/// Nystrom matrix of the rank-one singular part
/// sqrt(Re z) |V|^{1/2}(x) e^{-i sqrt(Re z)(x + y)} V_{1/2}(y).
Matrix assemble_L(Complex z, const PotentialSpec& v, const QuadratureGrid& grid);

struct DecompositionDiagnostics {
  Complex z;
  double l_hs = 0.0;             // sqrt(Re z) ||V||_1
  double l_hs_quadrature = 0.0;  // Frobenius norm of the assembled L
  double m_hs = 0.0;             // Frobenius norm of K - L
  double k_hs = 0.0;             // Frobenius norm of K
};

/// DomainError unless z lies in the half-strip.
DecompositionDiagnostics decomposition_diagnostics(Complex z, const PotentialSpec& v,
                                                   const QuadratureGrid& grid);

struct Detection {
  bool is_eigenvalue = false;
  Complex nearest_K_eigenvalue_to_minus_one;  // eigenvalue of eps K closest to -1
  Complex det_value;                          // det(I + eps K)
  Determinant det;
  double condition = 1.0;   // eigenvalue condition number of that eigenvalue
  double tolerance = 0.0;   // base_tol * condition
};

/// Eigenvalues and determinant of I + eps K_z (corrected matrix).
Detection detect_eigenvalue(Complex z, double eps, const PotentialSpec& v,
                            const QuadratureGrid& grid, KernelKind kind = KernelKind::kFull,
                            double base_tol = 1e-6);

/// det(I + eps K_z) from the corrected matrix.
Determinant bs_determinant(Complex z, double eps, const PotentialSpec& v,
                           const QuadratureGrid& grid, KernelKind kind = KernelKind::kFull);

struct SearchBox {
  double re_min = -10.0;
  double re_max = 10.0;
  double im_min = -0.99;
  double im_max = 0.99;
  bool contains(Complex z) const;
  double max_abs() const;
};

struct BSRoot {
  Complex z;
  double residual = 0.0;  // |det(I + eps K_z)|
  std::size_t seed_index = 0;
};

struct SeedFailure {
  std::size_t seed_index = 0;
  std::string message;
};

struct RootSearch {
  std::vector<BSRoot> roots;  // sorted by (Re, Im), distinct to 1e-6
  std::vector<SeedFailure> failures;
};

struct RootSearchOptions {
  BSGridOptions grid;
  double tolerance = 1e-12;  // relative step size at convergence
  int max_iterations = 100;
};

/// Secant iteration on z -> det(I + eps K_z) from each seed. A seed that
/// fails to converge or leaves the box is reported in failures.
RootSearch find_eigenvalues(double eps, const PotentialSpec& v, const SearchBox& box,
                            const std::vector<Complex>& seeds,
                            const RootSearchOptions& options = {});

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> epsilons;
  std::vector<Complex> eigenvalues;
  SearchBox box;
};

/// Locates one eigenvalue per eps and fits log Re lambda against log eps.
/// Without explicit seeds, each seed is the delta-model eigenvalue for the
/// coupling eps * int V. ConfigError for fewer than 3 values or a list that
/// does not decrease; EigenvalueLost if some eps yields no root.
RateFit weak_coupling_rate(const PotentialSpec& v, const std::vector<double>& epsilons,
                           const std::optional<SearchBox>& box = std::nullopt,
                           const std::vector<Complex>& seeds = {},
                           const RootSearchOptions& options = {});

/// One row of a Hilbert-Schmidt sweep.
struct HsSample {
  Complex z;
  double hs_norm = 0.0;
  double l_hs = 0.0;
  double m_hs = 0.0;
};

/// hs_norm and decomposition at each z, in input order. Points outside the
/// half-strip get NaN for l_hs and m_hs.
std::vector<HsSample> hs_sweep(const std::vector<Complex>& zs, const PotentialSpec& v,
                               const BSGridOptions& options = {});

std::string hs_sweep_to_csv(const std::vector<HsSample>& rows);
std::string roots_to_csv(const std::vector<BSRoot>& roots);

/// Least-squares slope and intercept of log y against log x.
std::pair<double, double> loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace pseudospec
