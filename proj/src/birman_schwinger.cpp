#include "pseudospec/birman_schwinger.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pseudospec/errors.hpp"
#include "pseudospec/format.hpp"
#include "pseudospec/parallel.hpp"

namespace pseudospec {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Samples {
  std::vector<double> abs_sqrt;  // |V|^{1/2}(x_i)
  std::vector<Complex> half;     // V_{1/2}(x_i)
  std::vector<double> sqrt_w;
};

Samples sample(const PotentialSpec& v, const QuadratureGrid& grid) {
  const double slack = 1e-12 * (1.0 + std::abs(v.support_lower()) + std::abs(v.support_upper()));
  if (grid.size() == 0 || grid.lower() > v.support_lower() + slack ||
      grid.upper() < v.support_upper() - slack) {
    throw ConfigError("quadrature grid does not cover the support of V");
  }
  Samples s;
  s.abs_sqrt.resize(grid.size());
  s.half.resize(grid.size());
  s.sqrt_w.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    s.abs_sqrt[i] = v.abs_sqrt(grid.nodes[i]);
    s.half[i] = v.half(grid.nodes[i]);
    s.sqrt_w[i] = std::sqrt(grid.weights[i]);
  }
  return s;
}

WaveNumbers checked_wave_numbers(Complex z) {
  if (!kernel_admissible(z)) throw SpectrumError("Birman-Schwinger operator undefined on the spectrum");
  return wave_numbers(z);
}

Complex kernel(const WaveNumbers& k, KernelKind kind, double x, double y) {
  return kind == KernelKind::kFull ? resolvent_kernel(k, x, y) : dirichlet_kernel(k, x, y);
}

// Integral of R(x, y) l_j(y) over one panel for every Lagrange basis
// polynomial l_j of the panel nodes, split at y = x.
std::vector<Complex> panel_product_weights(const WaveNumbers& k, KernelKind kind, double x,
                                           double lo, double hi, std::span<const double> t,
                                           const GaussRule& sub) {
  const std::size_t m = t.size();
  std::vector<double> bary(m, 1.0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < m; ++l)
      if (l != j) bary[j] /= (t[j] - t[l]);

  std::vector<Complex> out(m, Complex{0.0, 0.0});
  std::vector<double> basis(m);
  auto accumulate = [&](double a, double b) {
    if (!(b > a)) return;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t q = 0; q < sub.nodes.size(); ++q) {
      const double y = mid + half * sub.nodes[q];
      double denom = 0.0;
      std::size_t exact = m;
      for (std::size_t j = 0; j < m; ++j) {
        if (y == t[j]) {
          exact = j;
          break;
        }
        basis[j] = bary[j] / (y - t[j]);
        denom += basis[j];
      }
      const Complex r = kernel(k, kind, x, y) * (half * sub.weights[q]);
      if (exact < m) {
        out[exact] += r;
        continue;
      }
      for (std::size_t j = 0; j < m; ++j) out[j] += r * (basis[j] / denom);
    }
  };
  accumulate(lo, x);
  accumulate(x, hi);
  return out;
}

Complex signed_integral(const PotentialSpec& v) {
  const QuadratureGrid grid = bs_grid(v, 1.0);
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < grid.size(); ++i) total += grid.weights[i] * v.value(grid.nodes[i]);
  return total;
}

}  // namespace

QuadratureGrid bs_grid(const PotentialSpec& v, double z_scale, const BSGridOptions& options) {
  if (options.order < 1 || !(options.panels_per_wavelength > 0.0) ||
      !(options.max_panel_width > 0.0)) {
    throw ConfigError("invalid Birman-Schwinger grid options");
  }
  // |k+-| <= sqrt(|z| + 1) for every |z| <= z_scale.
  const double kmax = std::max(1.0, std::sqrt(std::abs(z_scale) + 1.0));
  const double width = std::min(options.max_panel_width,
                                2.0 * std::numbers::pi / kmax / options.panels_per_wavelength);
  std::vector<double> breaks{v.support_lower()};
  breaks.insert(breaks.end(), v.breakpoints().begin(), v.breakpoints().end());
  breaks.push_back(v.support_upper());
  double panels = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i)
    panels += std::max(1.0, std::ceil((breaks[i] - breaks[i - 1]) / width - 1e-12));
  if (panels * options.order > static_cast<double>(options.max_nodes))
    throw ConfigError("Birman-Schwinger grid would exceed max_nodes");
  return composite_grid(breaks, width, options.order);
}

NystromOperator assemble_K(Complex z, const PotentialSpec& v, const QuadratureGrid& grid,
                           KernelKind kind) {
  const WaveNumbers k = checked_wave_numbers(z);
  const Samples s = sample(v, grid);
  const auto n = static_cast<Eigen::Index>(grid.size());
  NystromOperator op{z, grid, Matrix(n, n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    const Complex right = s.half[jj] * s.sqrt_w[jj];
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      op.matrix(i, j) = s.sqrt_w[ii] * s.abs_sqrt[ii] *
                        kernel(k, kind, grid.nodes[ii], grid.nodes[jj]) * right;
    }
  }
  return op;
}

Matrix assemble_K_corrected(Complex z, const PotentialSpec& v, const QuadratureGrid& grid,
                            KernelKind kind) {
  Matrix m = assemble_K(z, v, grid, kind).matrix;
  const WaveNumbers k = wave_numbers(z);
  const Samples s = sample(v, grid);
  const auto order = static_cast<std::size_t>(grid.order);
  const GaussRule sub = gauss_legendre(grid.order + 12);
  for (std::size_t p = 0; p < grid.panel_count(); ++p) {
    const std::size_t first = p * order;
    const std::span<const double> t(grid.nodes.data() + first, order);
    for (std::size_t a = 0; a < order; ++a) {
      const std::size_t i = first + a;
      if (s.abs_sqrt[i] == 0.0) continue;
      const std::vector<Complex> w = panel_product_weights(
          k, kind, grid.nodes[i], grid.panel_edges[p], grid.panel_edges[p + 1], t, sub);
      for (std::size_t b = 0; b < order; ++b) {
        const std::size_t j = first + b;
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            s.sqrt_w[i] * s.abs_sqrt[i] * w[b] * s.half[j] / s.sqrt_w[j];
      }
    }
  }
  return m;
}

double hs_norm(Complex z, const PotentialSpec& v, const QuadratureGrid& grid, KernelKind kind) {
  const WaveNumbers k = checked_wave_numbers(z);
  const Samples s = sample(v, grid);
  const std::size_t n = grid.size();
  std::vector<double> weight(n);
  for (std::size_t i = 0; i < n; ++i) weight[i] = grid.weights[i] * s.abs_sqrt[i] * s.abs_sqrt[i];
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (weight[i] == 0.0) continue;
    double row = 0.5 * std::norm(kernel(k, kind, grid.nodes[i], grid.nodes[i])) * weight[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (weight[j] == 0.0) continue;
      row += std::norm(kernel(k, kind, grid.nodes[i], grid.nodes[j])) * weight[j];
    }
    total += 2.0 * weight[i] * row;
  }
  return std::sqrt(total);
}

double kernel_sup_bound(Complex z) {
  const WaveNumbers k = checked_wave_numbers(z);
  return 1.0 / std::abs(k.k_plus + k.k_minus) +
         1.0 / std::min(std::abs(k.k_plus), std::abs(k.k_minus));
}

Matrix assemble_L(Complex z, const PotentialSpec& v, const QuadratureGrid& grid) {
  const Samples s = sample(v, grid);
  const double root = std::sqrt(std::max(z.real(), 0.0));
  const auto n = static_cast<Eigen::Index>(grid.size());
  Vector left(n);
  Vector right(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    const Complex phase = std::exp(Complex{0.0, -root * grid.nodes[ii]});
    left(i) = s.sqrt_w[ii] * s.abs_sqrt[ii] * phase;
    right(i) = s.sqrt_w[ii] * s.half[ii] * phase;
  }
  return root * left * right.transpose();
}

DecompositionDiagnostics decomposition_diagnostics(Complex z, const PotentialSpec& v,
                                                   const QuadratureGrid& grid) {
  if (!in_strip(z)) throw DomainError("decomposition requires z in the half-strip");
  const WaveNumbers k = checked_wave_numbers(z);
  const Samples s = sample(v, grid);
  const std::size_t n = grid.size();
  const double root = std::sqrt(z.real());

  DecompositionDiagnostics d;
  d.z = z;
  d.l_hs = root * v.l1_norm();

  std::vector<double> weight(n);
  std::vector<Complex> phase(n);
  std::vector<Complex> unit_half(n);
  double l1_quadrature = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    weight[i] = grid.weights[i] * s.abs_sqrt[i] * s.abs_sqrt[i];
    phase[i] = std::exp(Complex{0.0, -root * grid.nodes[i]});
    unit_half[i] = s.abs_sqrt[i] > 0.0 ? s.half[i] / s.abs_sqrt[i] : Complex{0.0, 0.0};
    l1_quadrature += weight[i];
  }
  d.l_hs_quadrature = root * l1_quadrature;

  double k_total = 0.0;
  double m_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (weight[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (weight[j] == 0.0) continue;
      const Complex r = kernel(k, KernelKind::kFull, grid.nodes[i], grid.nodes[j]);
      const Complex l = root * phase[i] * phase[j];
      const double w = weight[i] * weight[j];
      k_total += std::norm(r) * w;
      m_total += std::norm(r - l) * w;
    }
  }
  d.k_hs = std::sqrt(k_total);
  d.m_hs = std::sqrt(m_total);
  return d;
}

Determinant bs_determinant(Complex z, double eps, const PotentialSpec& v,
                           const QuadratureGrid& grid, KernelKind kind) {
  Matrix a = eps * assemble_K_corrected(z, v, grid, kind);
  a.diagonal().array() += 1.0;
  return determinant(std::move(a));
}

Detection detect_eigenvalue(Complex z, double eps, const PotentialSpec& v,
                            const QuadratureGrid& grid, KernelKind kind, double base_tol) {
  const Matrix k = eps * assemble_K_corrected(z, v, grid, kind);
  Detection out;
  Matrix shifted = k;
  shifted.diagonal().array() += 1.0;
  out.det = determinant(std::move(shifted));
  out.det_value = out.det.value();
  if (k.rows() == 0 || eps == 0.0) {
    out.nearest_K_eigenvalue_to_minus_one = Complex{0.0, 0.0};
    out.tolerance = base_tol;
    return out;
  }
  const EigenDecomposition eig = eigen_decomposition(k);
  std::size_t best = 0;
  for (std::size_t i = 1; i < eig.values.size(); ++i)
    if (std::abs(eig.values[i] + 1.0) < std::abs(eig.values[best] + 1.0)) best = i;
  const auto col = static_cast<Eigen::Index>(best);
  const Complex overlap = eig.left.col(col).dot(eig.right.col(col));
  out.nearest_K_eigenvalue_to_minus_one = eig.values[best];
  out.condition = eig.left.col(col).norm() * eig.right.col(col).norm() / std::abs(overlap);
  out.tolerance = base_tol * out.condition;
  out.is_eigenvalue = std::abs(eig.values[best] + 1.0) <= out.tolerance;
  return out;
}

bool SearchBox::contains(Complex z) const {
  return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
}

double SearchBox::max_abs() const {
  return std::max({std::abs(Complex{re_min, im_min}), std::abs(Complex{re_min, im_max}),
                   std::abs(Complex{re_max, im_min}), std::abs(Complex{re_max, im_max})});
}

RootSearch find_eigenvalues(double eps, const PotentialSpec& v, const SearchBox& box,
                            const std::vector<Complex>& seeds, const RootSearchOptions& options) {
  if (!(box.re_min < box.re_max) || !(box.im_min < box.im_max))
    throw ConfigError("search box must have min < max");
  const QuadratureGrid grid = bs_grid(v, box.max_abs(), options.grid);
  auto f = [&](Complex z) { return bs_determinant(z, eps, v, grid).value(); };

  std::vector<std::optional<BSRoot>> found(seeds.size());
  std::vector<std::optional<SeedFailure>> failed(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t s) {
    try {
      Complex z0 = seeds[s];
      Complex z1 = z0 + 1e-4 * (1.0 + std::abs(z0));
      Complex f0 = f(z0);
      Complex f1 = f(z1);
      for (int it = 0; it < options.max_iterations; ++it) {
        if (f1 == Complex{0.0, 0.0}) {
          found[s] = BSRoot{z1, 0.0, s};
          return;
        }
        if (f1 == f0) throw NoConvergence("secant step degenerate");
        Complex step = -f1 * (z1 - z0) / (f1 - f0);
        const double cap = 0.5 * (1.0 + std::abs(z1));
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        const Complex z2 = z1 + step;
        if (!box.contains(z2)) throw NoConvergence("iterate left the search box");
        z0 = z1;
        f0 = f1;
        z1 = z2;
        f1 = f(z1);
        if (std::abs(step) <= options.tolerance * (1.0 + std::abs(z1))) {
          found[s] = BSRoot{z1, std::abs(f1), s};
          return;
        }
      }
      throw NoConvergence("secant iteration did not converge");
    } catch (const Error& e) {
      failed[s] = SeedFailure{s, e.what()};
    }
  });

  RootSearch out;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    if (failed[s]) out.failures.push_back(*failed[s]);
    if (!found[s]) continue;
    const bool duplicate = std::any_of(out.roots.begin(), out.roots.end(), [&](const BSRoot& r) {
      return std::abs(r.z - found[s]->z) < 1e-6;
    });
    if (!duplicate) out.roots.push_back(*found[s]);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const BSRoot& a, const BSRoot& b) {
    return a.z.real() != b.z.real() ? a.z.real() < b.z.real() : a.z.imag() < b.z.imag();
  });
  return out;
}

std::pair<double, double> loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ConfigError("log-log fit needs >= 2 points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("log-log fit needs positive data");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, (sy - slope * sx) / n};
}

RateFit weak_coupling_rate(const PotentialSpec& v, const std::vector<double>& epsilons,
                           const std::optional<SearchBox>& box, const std::vector<Complex>& seeds,
                           const RootSearchOptions& options) {
  if (epsilons.size() < 3) throw ConfigError("rate fit needs at least 3 coupling values");
  for (std::size_t i = 1; i < epsilons.size(); ++i)
    if (!(epsilons[i] < epsilons[i - 1])) throw ConfigError("coupling values must decrease");
  if (!seeds.empty() && seeds.size() != epsilons.size())
    throw ConfigError("one seed per coupling value required");

  const Complex mass = seeds.empty() ? signed_integral(v) : Complex{0.0, 0.0};
  RateFit fit;
  fit.epsilons = epsilons;
  bool first = true;
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    Complex seed;
    if (!seeds.empty()) {
      seed = seeds[i];
    } else {
      const Complex alpha = epsilons[i] * mass;
      if (alpha == Complex{0.0, 0.0}) throw ConfigError("potential has zero mean; pass seeds");
      seed = 1.0 / (alpha * alpha) - alpha * alpha / 4.0;
    }
    SearchBox b;
    if (box) {
      b = *box;
    } else {
      const double spread = 0.5 * std::abs(seed) + 1.0;
      b = SearchBox{seed.real() - spread, seed.real() + spread, -0.99, 0.99};
    }
    if (first) {
      fit.box = b;
      first = false;
    } else {
      fit.box.re_min = std::min(fit.box.re_min, b.re_min);
      fit.box.re_max = std::max(fit.box.re_max, b.re_max);
      fit.box.im_min = std::min(fit.box.im_min, b.im_min);
      fit.box.im_max = std::max(fit.box.im_max, b.im_max);
    }
    const RootSearch search = find_eigenvalues(epsilons[i], v, b, {seed}, options);
    if (search.roots.empty()) {
      throw EigenvalueLost("no eigenvalue for eps = " + format_double(epsilons[i]) +
                           " in box [" + format_double(b.re_min) + ", " +
                           format_double(b.re_max) + "] x [" + format_double(b.im_min) + ", " +
                           format_double(b.im_max) + "]");
    }
    fit.eigenvalues.push_back(search.roots.front().z);
  }
  std::vector<double> re(fit.eigenvalues.size());
  std::transform(fit.eigenvalues.begin(), fit.eigenvalues.end(), re.begin(),
                 [](Complex z) { return z.real(); });
  std::tie(fit.slope, fit.intercept) = loglog_fit(epsilons, re);
  return fit;
}

std::vector<HsSample> hs_sweep(const std::vector<Complex>& zs, const PotentialSpec& v,
                               const BSGridOptions& options) {
  std::vector<HsSample> rows(zs.size());
  parallel_for(zs.size(), [&](std::size_t i) {
    const QuadratureGrid grid = bs_grid(v, std::abs(zs[i]), options);
    HsSample& r = rows[i];
    r.z = zs[i];
    if (in_strip(zs[i])) {
      const DecompositionDiagnostics d = decomposition_diagnostics(zs[i], v, grid);
      r.hs_norm = d.k_hs;
      r.l_hs = d.l_hs;
      r.m_hs = d.m_hs;
    } else {
      r.hs_norm = hs_norm(zs[i], v, grid);
      r.l_hs = kNaN;
      r.m_hs = kNaN;
    }
  });
  return rows;
}

std::string hs_sweep_to_csv(const std::vector<HsSample>& rows) {
  std::string out = "re_z,im_z,hs_norm,l_hs,m_hs\n";
  for (const HsSample& r : rows) {
    out += format_double(r.z.real()) + ',' + format_double(r.z.imag()) + ',' +
           format_double(r.hs_norm) + ',' + format_double(r.l_hs) + ',' + format_double(r.m_hs) +
           '\n';
  }
  return out;
}

std::string roots_to_csv(const std::vector<BSRoot>& roots) {
  std::string out = "re,im,residual,seed_index\n";
  for (const BSRoot& r : roots) {
    out += format_double(r.z.real()) + ',' + format_double(r.z.imag()) + ',' +
           format_double(r.residual) + ',' + std::to_string(r.seed_index) + '\n';
  }
  return out;
}

}  // namespace pseudospec
