#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pseudospec/spectral_kernel.hpp"

namespace pseudospec {

/// amplitude * exp(-(x / width)^2)
struct GaussianPotential {
  Complex amplitude{1.0, 0.0};
  double width = 1.0;
};

/// amplitude on [center - radius, center + radius]
struct BumpPotential {
  Complex amplitude{1.0, 0.0};
  double center = 0.0;
  double radius = 1e-2;
};

/// (-i sgn(x) - b) on [-a, a]: inside the interval H + V acts as -d^2 - b.
struct StepPotential {
  double a = 1.0;
  Complex b{0.0, 0.0};
};

/// Piecewise-linear interpolation of samples, zero outside [x.front(), x.back()].
struct SampledPotential {
  std::vector<double> x;
  std::vector<Complex> values;
};

/// A perturbation V for H + eps V.
class PotentialSpec {
 public:
  using Variant = std::variant<GaussianPotential, BumpPotential, StepPotential, SampledPotential>;

  PotentialSpec() : kind_(GaussianPotential{{0.0, 0.0}, 1.0}) {}
  PotentialSpec(GaussianPotential g);
  PotentialSpec(BumpPotential b);
  PotentialSpec(StepPotential s);
  PotentialSpec(SampledPotential s);

  /// Rectangular bump of radius r standing in for alpha * delta(x).
  static PotentialSpec delta_like(Complex alpha, double radius = 1e-2);

  const Variant& kind() const { return kind_; }
  std::string describe() const;

  /// V(x); the average of the one-sided limits at a jump.
  Complex value(double x) const;
  /// |V|^{1/2}(x)
  double abs_sqrt(double x) const;
  /// V_{1/2}(x) = |V|^{1/2} e^{i arg V}, so V = |V|^{1/2} V_{1/2}.
  Complex half(double x) const;

  /// Interval outside which V vanishes (or is below 1e-300 for Gaussians).
  double support_lower() const { return lower_; }
  double support_upper() const { return upper_; }
  /// Interior points where V or one of its derivatives jumps.
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  bool is_zero() const { return zero_; }

  /// int |V|
  double l1_norm() const;
  /// int (1 + |x|^power) |V|
  double weighted_l1(int power) const;

 private:
  void finalize();

  Variant kind_;
  double lower_ = 0.0;
  double upper_ = 0.0;
  std::vector<double> breakpoints_;
  bool zero_ = false;
};

}  // namespace pseudospec
