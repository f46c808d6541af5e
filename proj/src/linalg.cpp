#include "pseudospec/linalg.hpp"

#include <cmath>
#include <string>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "pseudospec/errors.hpp"

namespace pseudospec {

TridiagonalLU::TridiagonalLU(std::span<const Complex> sub, std::span<const Complex> diag,
                             std::span<const Complex> super)
    : sub_(sub.begin(), sub.end()),
      diag_(diag.begin(), diag.end()),
      super_(super.begin(), super.end()),
      super2_(diag.size() > 2 ? diag.size() - 2 : 1),
      pivots_(diag.size()) {
  const auto n = static_cast<lapack_int>(diag_.size());
  if (n < 1 || sub_.size() + 1 != diag_.size() || super_.size() + 1 != diag_.size())
    throw ConfigError("tridiagonal factorisation: inconsistent band lengths");
  const lapack_int info =
      LAPACKE_zgttrf(n, sub_.data(), diag_.data(), super_.data(), super2_.data(), pivots_.data());
  if (info > 0) throw SingularError("tridiagonal matrix is exactly singular");
  if (info < 0) throw ConfigError("zgttrf: invalid argument " + std::to_string(-info));
}

void TridiagonalLU::solve(std::span<Complex> b) const {
  const auto n = static_cast<lapack_int>(diag_.size());
  LAPACKE_zgttrs(LAPACK_COL_MAJOR, 'N', n, 1, sub_.data(), diag_.data(), super_.data(),
                 super2_.data(), pivots_.data(), b.data(), n);
}

void TridiagonalLU::solve_adjoint(std::span<Complex> b) const {
  const auto n = static_cast<lapack_int>(diag_.size());
  LAPACKE_zgttrs(LAPACK_COL_MAJOR, 'C', n, 1, sub_.data(), diag_.data(), super_.data(),
                 super2_.data(), pivots_.data(), b.data(), n);
}

std::vector<Complex> eigenvalues(Matrix a) {
  const auto n = static_cast<lapack_int>(a.rows());
  std::vector<Complex> w(a.rows());
  if (n == 0) return w;
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, w.data(),
                                        nullptr, 1, nullptr, 1);
  if (info != 0) throw ConvergenceError("zgeev failed with info " + std::to_string(info));
  return w;
}

EigenDecomposition eigen_decomposition(Matrix a) {
  const auto n = static_cast<lapack_int>(a.rows());
  EigenDecomposition out;
  out.values.resize(a.rows());
  out.left.resize(n, n);
  out.right.resize(n, n);
  if (n == 0) return out;
  const lapack_int info =
      LAPACKE_zgeev(LAPACK_COL_MAJOR, 'V', 'V', n, a.data(), n, out.values.data(),
                    out.left.data(), n, out.right.data(), n);
  if (info != 0) throw ConvergenceError("zgeev failed with info " + std::to_string(info));
  return out;
}

std::vector<double> singular_values(Matrix a) {
  const auto m = static_cast<lapack_int>(a.rows());
  const auto n = static_cast<lapack_int>(a.cols());
  std::vector<double> s(std::min(a.rows(), a.cols()));
  if (s.empty()) return s;
  const lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', m, n, a.data(), m, s.data(),
                                         nullptr, 1, nullptr, 1);
  if (info != 0) throw ConvergenceError("zgesdd failed with info " + std::to_string(info));
  return s;
}

Complex Determinant::value() const { return mantissa * std::pow(10.0, exponent10); }

double Determinant::log10_abs() const {
  const double m = std::abs(mantissa);
  return m == 0.0 ? -INFINITY : std::log10(m) + exponent10;
}

Determinant determinant(Matrix a) {
  const auto n = static_cast<lapack_int>(a.rows());
  Determinant det;
  if (n == 0) return det;
  std::vector<lapack_int> ipiv(a.rows());
  const lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, a.data(), n, ipiv.data());
  if (info < 0) throw ConfigError("zgetrf: invalid argument");
  for (lapack_int i = 0; i < n; ++i) {
    Complex pivot = a(i, i);
    if (ipiv[i] != i + 1) pivot = -pivot;
    if (pivot == Complex{0.0, 0.0}) return Determinant{{0.0, 0.0}, 0.0};
    // Keep the running mantissa in [1, 10).
    const double mag = std::abs(pivot);
    const double e = std::floor(std::log10(mag));
    det.mantissa *= pivot / std::pow(10.0, e);
    det.exponent10 += e;
    const double mm = std::abs(det.mantissa);
    const double me = std::floor(std::log10(mm));
    det.mantissa /= std::pow(10.0, me);
    det.exponent10 += me;
  }
  return det;
}

}  // namespace pseudospec
