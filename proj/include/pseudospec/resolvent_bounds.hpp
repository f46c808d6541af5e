#pragma once

#include <span>
#include <vector>

#include "pseudospec/quadrature.hpp"
#include "pseudospec/spectral_kernel.hpp"

namespace pseudospec {

enum BoundMethod : unsigned {
  kSchur = 1u << 0,
  kPseudomode = 1u << 1,
  kNumericalRange = 1u << 2,
};

/// Two-sided enclosure of ||(H - z)^{-1}||.
struct BoundPair {
  Complex z;
  double lower = 0.0;
  double upper = 0.0;
  unsigned methods = 0;  // BoundMethod bits that contributed
};

/// Schur-test bound: the larger of the closed-form row-integral bounds for
/// x > 0 and x < 0. DomainError when |Im z| >= 1.
double schur_upper_bound(Complex z);

/// ||(H - z)^{-1} f0|| / ||f0|| restricted to x < 0, in closed form:
/// 1 / (2 sqrt(Re k+ Re k-) |k+ + k-|). DomainError when |Im z| >= 1.
double pseudomode_lower_bound(Complex z);

/// 1 / dist(z, closure of the half-strip). DomainError inside the closure.
double numrange_bound(Complex z);

/// Best available analytic enclosure: pseudomode/Schur inside the strip,
/// 0 / numerical-range bound outside its closure. SpectrumError on the rays.
BoundPair bound_pair(Complex z);

/// u(x_i) = sum_j w_j R_z(x_i, x_j) f_j in O(n) via recursive exponential sums.
/// SpectrumError when z is on the spectrum.
std::vector<Complex> apply_resolvent(Complex z, const QuadratureGrid& grid,
                                     std::span<const Complex> f);

/// The test function f0(x) = exp(-conj(k+) x) on x > 0, zero for x < 0.
struct Pseudomode {
  Complex z;
  std::vector<Complex> samples;
  double norm = 0.0;  // quadrature norm of the samples
};

Pseudomode pseudomode(Complex z, const QuadratureGrid& grid);

/// Potential i(2x/a + 1) on [-a, 0], i sgn(x) elsewhere: continuous, and equal
/// to i sgn(x) outside [-a, 0].
struct SmoothedSignPotential {
  double a = 1.0;
  Complex value(double x) const;
  /// i sgn(x) - value(x), supported in [-a, 0].
  Complex difference(double x) const;
};

struct RegularizedRatio {
  double ratio = 0.0;          // ||g0|| / ||(H~ - z) g0||
  double g0_norm = 0.0;
  double f0_norm = 0.0;
  double perturbation_norm = 0.0;  // ||h g0||
  std::size_t grid_size = 0;
};

/// Pseudomode ratio for the regularised operator H~ = -d^2 + V, V smooth near
/// 0: g0 = (H - z)^{-1} f0 and (H~ - z) g0 = f0 - h g0. DomainError unless
/// z is in W and a > 0.
RegularizedRatio regularized_pseudomode_ratio(Complex z, double a,
                                              const ResolventGridOptions& options = {});

}  // namespace pseudospec
