#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pseudospec/spectral_kernel.hpp"

namespace pseudospec {

/// Gauss-Legendre rule of the given order on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int order);

/// Composite Gauss-Legendre grid. Panels never straddle a breakpoint, so
/// functions with jumps at breakpoints are integrated panel-wise smoothly.
struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> panel_edges;  // panels are [edges[p], edges[p+1]]
  int order = 0;                    // nodes per panel

  std::size_t size() const { return nodes.size(); }
  std::size_t panel_count() const { return panel_edges.empty() ? 0 : panel_edges.size() - 1; }
  double lower() const { return panel_edges.front(); }
  double upper() const { return panel_edges.back(); }
  double half_length() const { return 0.5 * (upper() - lower()); }
  double weight_sum() const;
};

/// Splits each interval between consecutive breakpoints into equal panels of
/// width at most max_panel_width. Breakpoints must be strictly increasing.
QuadratureGrid composite_grid(std::span<const double> breakpoints, double max_panel_width,
                              int order);

struct ResolventGridOptions {
  double decay_threshold = 1e-8;     // e^{-Re k * L} below this at the truncation
  double panels_per_wavelength = 10;  // panel width <= wavelength / this
  int order = 4;
  double min_half_length = 10.0;
  double max_half_length = 1e5;
  std::size_t max_nodes = 20'000'000;
  std::vector<double> extra_breakpoints;  // inside (-L, L), e.g. a smoothing interval
};

/// Symmetric grid on [-L, L] adapted to the decay and oscillation of R_z:
/// e^{-min Re k_+- * L} < decay_threshold and panels resolve the wavelength
/// 2 pi / max|k_+-|. Always has a breakpoint at 0.
QuadratureGrid resolvent_grid(Complex z, const ResolventGridOptions& options = {});

/// Uniform midpoint grid with nodes -L + j h (j = 1..n), h = 2L / (n + 1):
/// the same nodes as a finite-difference box of half length L.
QuadratureGrid midpoint_grid(double half_length, std::size_t n);

/// sum_j w_j |f_j|^2
double l2_norm_squared(const QuadratureGrid& grid, std::span<const Complex> values);
double l2_norm(const QuadratureGrid& grid, std::span<const Complex> values);

}  // namespace pseudospec
