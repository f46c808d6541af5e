#pragma once

// Second-order finite differences for -d^2/dx^2 + V on a Dirichlet box
// [-L, L], used as an independent check on the analytic results.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pseudospec/linalg.hpp"
#include "pseudospec/potential.hpp"
#include "pseudospec/spectral_kernel.hpp"

namespace pseudospec {

enum class FDPotentialKind {
  kFree,                // V = 0
  kSign,                // i sgn(x)
  kSignDirichletSplit,  // i sgn(x) with a Dirichlet condition at 0
  kStep,                // i sgn(x) + (-i sgn(x) - b) on [-a, a]
  kSignPlus,            // i sgn(x) + eps V(x)
  kSmoothed,            // i (2x/a + 1) on [-a, 0], i sgn(x) elsewhere
};

struct FDPotential {
  FDPotentialKind kind = FDPotentialKind::kSign;
  double a = 1.0;            // step half-width or smoothing length
  Complex b{0.0, 0.0};       // step depth
  double epsilon = 0.0;      // coupling for kSignPlus
  PotentialSpec perturbation;

  static FDPotential free();
  static FDPotential sign();
  static FDPotential dirichlet_split();
  static FDPotential step(double a, Complex b);
  static FDPotential sign_plus(double epsilon, PotentialSpec v);
  static FDPotential smoothed(double a);

  /// Potential at a node; the mean of the one-sided limits at a jump.
  Complex value(double x) const;
  std::string describe() const;
};

/// Tridiagonal complex-symmetric matrix of the scheme.
struct FDOperator {
  FDPotential potential;
  double half_length = 0.0;
  std::size_t n = 0;  // interior nodes, always odd so that node n/2 sits at 0
  double h = 0.0;     // 2 L / (n + 1)
  std::vector<Complex> diagonal;
  double off_diagonal = 0.0;  // -1 / h^2
  std::optional<Complex> center_jump;

  std::size_t center_index() const { return n / 2; }
  double node(std::size_t j) const { return -half_length + static_cast<double>(j + 1) * h; }
  std::vector<double> nodes() const;
  /// Off-diagonal coupling between nodes j and j+1 (zero across a Dirichlet split).
  double coupling(std::size_t j) const;
  /// max row sum of |A|
  double norm_inf() const;
  Matrix dense() const;
  std::vector<Complex> apply(std::span<const Complex> v) const;
};

struct OracleResult {
  double value = 0.0;
  double estimated_discretization_error = 0.0;
};

struct EigenOracleResult {
  Complex value;
  double estimated_discretization_error = 0.0;
};

/// n is rounded up to the next odd integer. ConfigError on non-positive sizes or n < 3.
FDOperator build_fd(const FDPotential& potential, double half_length, std::size_t n,
                    std::optional<Complex> center_jump = std::nullopt);

/// The same discretisation with h halved (2n + 1 nodes, still a node at 0).
FDOperator refine(const FDOperator& op);

/// 1 / sigma_min(A - z) from Lanczos on (A - z)^{-1} (A - z)^{-H}, O(n) per step.
/// SingularError if sigma_min < 1e-14 ||A||.
double inverse_min_singular_value(const FDOperator& op, Complex z);

/// Same quantity from a dense SVD; for cross-checks on small n.
double inverse_min_singular_value_dense(const FDOperator& op, Complex z);

/// Resolvent-norm oracle with a Richardson error estimate from the refined grid.
/// With estimate_error = false the refined solve is skipped and the error is 0.
OracleResult resolvent_norm_fd(const FDOperator& op, Complex z, bool estimate_error = true);

/// Solves (A - z) u = f.
std::vector<Complex> solve_fd(const FDOperator& op, Complex z, std::span<const Complex> f);

/// All matrix eigenvalues (dense). ConfigError for n > 6000.
std::vector<Complex> eigenvalues_fd(const FDOperator& op);

/// Eigenvalue of the matrix nearest to shift by inverse then Rayleigh-quotient
/// iteration. ConvergenceError if the iteration stalls.
Complex nearest_eigenvalue(const FDOperator& op, Complex shift);

/// nearest_eigenvalue on op and refine(op), Richardson-extrapolated.
EigenOracleResult nearest_eigenvalue_fd(const FDOperator& op, Complex shift);

struct PhysicalEigenvalue {
  Complex value;
  double refinement_shift = 0.0;  // |change| under n -> 2n
  double box_shift = 0.0;         // |change| under L -> 1.5 L
};

/// Matrix eigenvalues of op inside the window Re <= re_max, |Im| <= im_max
/// that move by less than box_tol under L -> 1.5 L (same h) and by less than
/// refine_tol under h -> h/2.
std::vector<PhysicalEigenvalue> physical_eigenvalues(const FDOperator& op, double re_max,
                                                     double im_max, double box_tol = 1e-4,
                                                     double refine_tol = 1e-2);

}  // namespace pseudospec
