#include "pseudospec/resolvent_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

void require_inside_strip_band(Complex z, const char* what) {
  if (!(std::abs(z.imag()) < 1.0)) {
    throw DomainError(std::string(what) + " requires |Im z| < 1");
  }
}

// Closed-form bound on the row integral of |R_z| for rows on the side whose
// wave number is `own`; `other` is the wave number of the opposite half-line.
double schur_row(Complex own, Complex other) {
  const double abs_sum = std::abs(own + other);
  const double abs_diff = std::abs(own - other);
  const double re_own = own.real();
  const double abs_own = std::abs(own);
  return 1.0 / (other.real() * abs_sum) + 1.0 / (2.0 * re_own * abs_own) +
         abs_diff / (2.0 * re_own * abs_own * abs_sum);
}

}  // namespace

double schur_upper_bound(Complex z) {
  require_inside_strip_band(z, "Schur bound");
  const WaveNumbers k = wave_numbers(z);
  return std::max(schur_row(k.k_plus, k.k_minus), schur_row(k.k_minus, k.k_plus));
}

double pseudomode_lower_bound(Complex z) {
  require_inside_strip_band(z, "pseudomode bound");
  const WaveNumbers k = wave_numbers(z);
  return 1.0 / (2.0 * std::sqrt(k.k_plus.real() * k.k_minus.real()) *
                std::abs(k.k_plus + k.k_minus));
}

double numrange_bound(Complex z) {
  const double d = distance_to_closed_strip(z);
  if (!(d > 0.0)) throw DomainError("numerical-range bound requires z outside the closed half-strip");
  return 1.0 / d;
}

BoundPair bound_pair(Complex z) {
  if (distance_to_spectrum(z) <= kDefaultSpectrumTol)
    throw SpectrumError("no resolvent bound on the spectrum");
  BoundPair out;
  out.z = z;
  if (distance_to_closed_strip(z) > 0.0) {
    out.upper = numrange_bound(z);
    out.methods = kNumericalRange;
    return out;
  }
  out.lower = pseudomode_lower_bound(z);
  out.upper = schur_upper_bound(z);
  out.lower = std::min(out.lower, out.upper);
  out.methods = kSchur | kPseudomode;
  return out;
}

std::vector<Complex> apply_resolvent(Complex z, const QuadratureGrid& grid,
                                     std::span<const Complex> f) {
  if (distance_to_spectrum(z) <= kDefaultSpectrumTol)
    throw SpectrumError("apply_resolvent: z lies on the spectrum");
  if (f.size() != grid.size()) throw ConfigError("apply_resolvent: sample count mismatch");
  const WaveNumbers k = wave_numbers(z);
  const Complex kp = k.k_plus;
  const Complex km = k.k_minus;
  const Complex sum = kp + km;
  const std::size_t n = grid.size();
  const auto& x = grid.nodes;
  const auto& w = grid.weights;

  // Nodes are sorted; [0, split) are negative, [split, n) non-negative.
  const std::size_t split =
      static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), 0.0) - x.begin());

  // Moments against the decaying exponentials of each half-line.
  Complex moment_neg{0.0, 0.0};  // sum_{x<0} w e^{k- x} f
  Complex moment_pos{0.0, 0.0};  // sum_{x>=0} w e^{-k+ x} f
  for (std::size_t j = 0; j < split; ++j) moment_neg += w[j] * std::exp(km * x[j]) * f[j];
  for (std::size_t j = split; j < n; ++j) moment_pos += w[j] * std::exp(-kp * x[j]) * f[j];
  const Complex reflected = (moment_neg + moment_pos) / sum;

  std::vector<Complex> u(n);
  // sum_{j in block} w_j e^{-kk |x_i - x_j|} f_j by forward/backward recursion.
  auto convolve = [&](std::size_t begin, std::size_t end, Complex kk) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = begin; i < end; ++i) {
      if (i > begin) acc *= std::exp(-kk * (x[i] - x[i - 1]));
      acc += w[i] * f[i];
      u[i] = acc;
    }
    acc = Complex{0.0, 0.0};
    for (std::size_t i = end; i-- > begin;) {
      if (i + 1 < end) {
        acc = (acc + w[i + 1] * f[i + 1]) * std::exp(-kk * (x[i + 1] - x[i]));
      }
      u[i] += acc;
    }
  };
  convolve(0, split, km);
  convolve(split, n, kp);

  const Complex own_neg = reflected - moment_neg / (2.0 * km);
  const Complex own_pos = reflected - moment_pos / (2.0 * kp);
  for (std::size_t i = 0; i < split; ++i) {
    u[i] = u[i] / (2.0 * km) + std::exp(km * x[i]) * own_neg;
  }
  for (std::size_t i = split; i < n; ++i) {
    u[i] = u[i] / (2.0 * kp) + std::exp(-kp * x[i]) * own_pos;
  }
  return u;
}

Pseudomode pseudomode(Complex z, const QuadratureGrid& grid) {
  const Complex kp = wave_numbers(z).k_plus;
  Pseudomode mode;
  mode.z = z;
  mode.samples.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.nodes[i];
    mode.samples[i] = x > 0.0 ? std::exp(-std::conj(kp) * x) : Complex{0.0, 0.0};
  }
  mode.norm = l2_norm(grid, mode.samples);
  return mode;
}

Complex SmoothedSignPotential::value(double x) const {
  if (x >= -a && x <= 0.0) return {0.0, 2.0 * x / a + 1.0};
  return {0.0, x > 0.0 ? 1.0 : -1.0};
}

Complex SmoothedSignPotential::difference(double x) const {
  const double sgn = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
  return Complex{0.0, sgn} - value(x);
}

RegularizedRatio regularized_pseudomode_ratio(Complex z, double a,
                                              const ResolventGridOptions& options) {
  if (classify_region(z) != Region::kW) throw DomainError("regularised pseudomode requires z in W");
  if (!(a > 0.0)) throw DomainError("smoothing scale a must be positive");
  ResolventGridOptions opts = options;
  opts.extra_breakpoints.push_back(-a);
  const QuadratureGrid grid = resolvent_grid(z, opts);
  const Pseudomode f0 = pseudomode(z, grid);
  const std::vector<Complex> g0 = apply_resolvent(z, grid, f0.samples);
  const SmoothedSignPotential profile{a};

  std::vector<Complex> hg(grid.size());
  std::vector<Complex> residual(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    hg[i] = profile.difference(grid.nodes[i]) * g0[i];
    residual[i] = f0.samples[i] - hg[i];
  }
  RegularizedRatio out;
  out.g0_norm = l2_norm(grid, g0);
  out.f0_norm = f0.norm;
  out.perturbation_norm = l2_norm(grid, hg);
  out.ratio = out.g0_norm / l2_norm(grid, residual);
  out.grid_size = grid.size();
  return out;
}

}  // namespace pseudospec
