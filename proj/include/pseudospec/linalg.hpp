#pragma once

// Thin LAPACK-backed helpers over Eigen storage.

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "pseudospec/spectral_kernel.hpp"

namespace pseudospec {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// LU factorisation with partial pivoting of a complex tridiagonal matrix.
class TridiagonalLU {
 public:
  /// sub/super have length n-1. Throws SingularError on an exactly zero pivot.
  TridiagonalLU(std::span<const Complex> sub, std::span<const Complex> diag,
                std::span<const Complex> super);

  std::size_t size() const { return diag_.size(); }
  /// Solves A x = b in place.
  void solve(std::span<Complex> b) const;
  /// Solves A^H x = b in place.
  void solve_adjoint(std::span<Complex> b) const;

 private:
  std::vector<Complex> sub_, diag_, super_, super2_;
  std::vector<int> pivots_;
};

/// All eigenvalues of a dense matrix. ConvergenceError if LAPACK fails.
std::vector<Complex> eigenvalues(Matrix a);

struct EigenDecomposition {
  std::vector<Complex> values;
  Matrix left;   // columns are left eigenvectors (y^H A = lambda y^H)
  Matrix right;  // columns are right eigenvectors
};

EigenDecomposition eigen_decomposition(Matrix a);

/// Singular values in descending order.
std::vector<double> singular_values(Matrix a);

/// det(a) as mantissa * 10^exponent to survive over/underflow for large n.
struct Determinant {
  Complex mantissa{1.0, 0.0};
  double exponent10 = 0.0;
  Complex value() const;
  double log10_abs() const;
};

Determinant determinant(Matrix a);

}  // namespace pseudospec
