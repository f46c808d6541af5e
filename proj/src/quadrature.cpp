#include "pseudospec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence, n >= 1.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

GaussRule gauss_legendre(int order) {
  if (order < 1) throw ConfigError("Gauss-Legendre order must be >= 1");
  GaussRule rule;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 2.0);
  if (order == 1) return rule;
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(order, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(order, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

double QuadratureGrid::weight_sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

QuadratureGrid composite_grid(std::span<const double> breakpoints, double max_panel_width,
                              int order) {
  if (breakpoints.size() < 2) throw ConfigError("composite grid needs at least two breakpoints");
  if (!(max_panel_width > 0.0)) throw ConfigError("panel width must be positive");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw ConfigError("breakpoints must be strictly increasing");
  }
  const GaussRule rule = gauss_legendre(order);
  QuadratureGrid grid;
  grid.order = order;
  grid.panel_edges.push_back(breakpoints.front());
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const double a = breakpoints[i - 1];
    const double b = breakpoints[i];
    const auto panels = static_cast<std::size_t>(std::ceil((b - a) / max_panel_width - 1e-12));
    const std::size_t count = std::max<std::size_t>(panels, 1);
    for (std::size_t p = 1; p <= count; ++p) {
      grid.panel_edges.push_back(p == count ? b : a + (b - a) * static_cast<double>(p) / count);
    }
  }
  const std::size_t n_panels = grid.panel_count();
  grid.nodes.reserve(n_panels * order);
  grid.weights.reserve(n_panels * order);
  for (std::size_t p = 0; p < n_panels; ++p) {
    const double a = grid.panel_edges[p];
    const double b = grid.panel_edges[p + 1];
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int j = 0; j < order; ++j) {
      grid.nodes.push_back(mid + half * rule.nodes[j]);
      grid.weights.push_back(half * rule.weights[j]);
    }
  }
  return grid;
}

QuadratureGrid resolvent_grid(Complex z, const ResolventGridOptions& options) {
  if (!kernel_admissible(z)) throw SpectrumError("no resolvent grid on the spectrum");
  const WaveNumbers k = wave_numbers(z);
  const double decay = std::min(k.k_plus.real(), k.k_minus.real());
  double half_length = options.max_half_length;
  if (decay > 0.0) half_length = -std::log(options.decay_threshold) / decay;
  half_length = std::clamp(half_length, options.min_half_length, options.max_half_length);

  const double wavenumber = std::max({std::abs(k.k_plus), std::abs(k.k_minus), 1.0});
  const double panel = 2.0 * std::numbers::pi / wavenumber / options.panels_per_wavelength;

  std::vector<double> breaks{-half_length, 0.0, half_length};
  for (double b : options.extra_breakpoints) {
    if (b > -half_length && b < half_length && b != 0.0) breaks.push_back(b);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const double estimate = 2.0 * half_length / panel * options.order;
  if (estimate > static_cast<double>(options.max_nodes)) {
    throw ConfigError("resolvent grid would need " + std::to_string(estimate) +
                      " nodes, above the configured maximum");
  }
  return composite_grid(breaks, panel, options.order);
}

QuadratureGrid midpoint_grid(double half_length, std::size_t n) {
  if (!(half_length > 0.0) || n < 1) throw ConfigError("midpoint grid needs L > 0 and n >= 1");
  const double h = 2.0 * half_length / static_cast<double>(n + 1);
  QuadratureGrid grid;
  grid.order = 1;
  grid.nodes.resize(n);
  grid.weights.assign(n, h);
  grid.panel_edges.resize(n + 1);
  for (std::size_t j = 0; j < n; ++j) grid.nodes[j] = -half_length + h * static_cast<double>(j + 1);
  for (std::size_t j = 0; j <= n; ++j)
    grid.panel_edges[j] = -half_length + h * (static_cast<double>(j) + 0.5);
  return grid;
}

double l2_norm_squared(const QuadratureGrid& grid, std::span<const Complex> values) {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += grid.weights[i] * std::norm(values[i]);
  return s;
}

double l2_norm(const QuadratureGrid& grid, std::span<const Complex> values) {
  return std::sqrt(l2_norm_squared(grid, values));
}

}  // namespace pseudospec
