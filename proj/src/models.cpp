#include "pseudospec/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pseudospec/birman_schwinger.hpp"
#include "pseudospec/errors.hpp"
#include "pseudospec/format.hpp"
#include "pseudospec/parallel.hpp"

namespace pseudospec {

namespace {

constexpr double kPi = std::numbers::pi;

Complex prefactor(Complex lambda, Complex b) {
  return principal_sqrt(lambda * lambda + 1.0) - lambda - b;
}

Complex difference_term(Complex lambda) {
  return Complex{0.0, -1.0} *
         (principal_sqrt(lambda + Complex{0.0, 1.0}) - principal_sqrt(lambda - Complex{0.0, 1.0}));
}

void require_band(Complex lambda) {
  if (!(std::abs(lambda.imag()) < 1.0))
    throw DomainError("step-model equation requires |Im lambda| < 1");
}

// f(lambda) = cot(2a q) - rhs on a branch, in terms of q = sqrt(lambda + b).
double branch_function(double q, double a, double b) {
  const double lambda = q * q - b;
  return std::cos(2.0 * a * q) / std::sin(2.0 * a * q) - cot_form_rhs(lambda, b);
}

double gamma_distance_on_branch(const SignTriple& s, Complex alpha) {
  // Coarse log-spaced scan in r, then golden-section refinement around the best sample.
  auto d = [&](double r) { return std::abs(gamma_point(s, r) - alpha); };
  std::vector<double> rs{0.0};
  for (int i = 0; i <= 400; ++i) rs.push_back(std::pow(10.0, -6.0 + 12.0 * i / 400.0));
  std::size_t best = 0;
  for (std::size_t i = 1; i < rs.size(); ++i)
    if (d(rs[i]) < d(rs[best])) best = i;
  double lo = rs[best == 0 ? 0 : best - 1];
  double hi = rs[std::min(best + 1, rs.size() - 1)];
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
    if (d(x1) < d(x2)) {
      hi = x2;
      x2 = x1;
      x1 = hi - g * (hi - lo);
    } else {
      lo = x1;
      x1 = x2;
      x2 = lo + g * (hi - lo);
    }
  }
  return std::min({d(rs[best]), d(0.5 * (lo + hi))});
}

}  // namespace

DeltaModel delta_eigenvalue(Complex alpha, double tol_spec) {
  if (alpha == Complex{0.0, 0.0}) throw ZeroCouplingError("coupling alpha must be nonzero");
  DeltaModel m;
  m.alpha = alpha;
  const Complex a2 = alpha * alpha;
  m.lambda = 1.0 / a2 - a2 / 4.0;
  m.exists = distance_to_spectrum(m.lambda) > tol_spec;
  if (m.exists) {
    const WaveNumbers k = wave_numbers(m.lambda);
    m.matching_residual = std::abs(k.k_plus + k.k_minus + alpha);
    m.bound_state = k.k_plus.real() > 0.0 && k.k_minus.real() > 0.0 &&
               m.matching_residual <= 1e-8 * (1.0 + std::abs(alpha));
  } else {
    m.matching_residual = std::numeric_limits<double>::quiet_NaN();
  }
  return m;
}

std::vector<SignTriple> all_sign_triples() {
  std::vector<SignTriple> out;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1})
      for (int s3 : {-1, 1}) out.push_back({s1, s2, s3});
  return out;
}

Complex gamma_point(const SignTriple& s, double r) {
  const Complex i{0.0, 1.0};
  const double s2 = s[1];
  const Complex inner = principal_sqrt(r * (r + 2.0 * i * s2));
  return static_cast<double>(s[0]) *
         principal_sqrt(-2.0 * (r + i * s2) + 2.0 * static_cast<double>(s[2]) * inner);
}

GammaCurve gamma_curve(const SignTriple& sigma, const std::vector<double>& r_samples) {
  for (int s : sigma)
    if (s != 1 && s != -1) throw ConfigError("sign triple entries must be +-1");
  GammaCurve c;
  c.sigma = sigma;
  for (double r : r_samples) {
    if (!(r >= 0.0)) throw ConfigError("curve parameter r must be non-negative");
    c.samples.push_back({r, gamma_point(sigma, r)});
  }
  return c;
}

double distance_to_gamma(Complex alpha) {
  double best = std::numeric_limits<double>::infinity();
  for (const SignTriple& s : all_sign_triples())
    best = std::min(best, gamma_distance_on_branch(s, alpha));
  return best;
}

Complex implicit_residual_trigonometric(Complex lambda, double a, Complex b) {
  require_band(lambda);
  const Complex w = lambda + b;
  Complex sinc;
  Complex cosine;
  if (w == Complex{0.0, 0.0}) {
    sinc = 2.0 * a;
    cosine = 1.0;
  } else {
    const Complex q = principal_sqrt(w);
    sinc = std::sin(2.0 * a * q) / q;
    cosine = std::cos(2.0 * a * q);
  }
  return prefactor(lambda, b) * sinc + difference_term(lambda) * cosine;
}

Complex implicit_residual_hyperbolic(Complex lambda, double a, Complex b) {
  require_band(lambda);
  const double p = std::sqrt(std::abs(lambda + b));
  const Complex sinc = p == 0.0 ? Complex{2.0 * a, 0.0} : Complex{std::sinh(2.0 * a * p) / p, 0.0};
  return prefactor(lambda, b) * sinc + difference_term(lambda) * std::cosh(2.0 * a * p);
}

Complex implicit_residual(Complex lambda, double a, Complex b) {
  const Complex w = lambda + b;
  if (w.imag() == 0.0 && w.real() < 0.0) return implicit_residual_hyperbolic(lambda, a, b);
  return implicit_residual_trigonometric(lambda, a, b);
}

double cot_form_rhs(double lambda, double b) {
  const double q = std::sqrt(lambda + b);
  const double im_root = principal_sqrt(Complex{lambda, 1.0}).imag();
  return -(std::sqrt(lambda * lambda + 1.0) - (lambda + b)) / (2.0 * q * im_root);
}

StepModel find_step_eigenvalues(double a, double b, double lambda_max) {
  if (!(a > 0.0)) throw ConfigError("step half-width a must be positive");
  if (!(lambda_max > -b)) throw ConfigError("lambda_max must exceed -b");
  StepModel model{a, b, lambda_max, {}};
  const double q_max = std::sqrt(lambda_max + b);
  const double period = kPi / (2.0 * a);
  const int branches = static_cast<int>(std::ceil(q_max / period));
  constexpr int kSamples = 256;

  std::vector<std::vector<StepRoot>> per_branch(static_cast<std::size_t>(branches));
  parallel_for(per_branch.size(), [&](std::size_t kk) {
    const int k = static_cast<int>(kk);
    const double q_lo = k * period;
    const double q_hi = std::min((k + 1) * period, q_max);
    const bool partial = q_hi < (k + 1) * period;
    // Stay clear of the poles of cot at both ends of a full branch.
    const double margin = 1e-9 * period;
    std::vector<double> qs;
    for (int s = 0; s <= kSamples; ++s) {
      double q = q_lo + (q_hi - q_lo) * s / kSamples;
      if (s == 0) q = q_lo + margin;
      if (s == kSamples && !partial) q = q_hi - margin;
      qs.push_back(q);
    }
    std::vector<StepRoot>& roots = per_branch[kk];
    double f_prev = branch_function(qs[0], a, b);
    for (std::size_t s = 1; s < qs.size(); ++s) {
      const double f_cur = branch_function(qs[s], a, b);
      if (f_prev == 0.0 || (f_prev > 0.0) != (f_cur > 0.0)) {
        // Bisect in lambda.
        double lo = qs[s - 1] * qs[s - 1] - b;
        double hi = qs[s] * qs[s] - b;
        double f_lo = f_prev;
        while (hi - lo > 1e-12) {
          const double mid = 0.5 * (lo + hi);
          const double f_mid = branch_function(std::sqrt(mid + b), a, b);
          if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
          } else {
            hi = mid;
          }
        }
        const double lambda = 0.5 * (lo + hi);
        if (lambda <= lambda_max) {
          roots.push_back({lambda, std::abs(implicit_residual(lambda, a, b)), k});
        }
      }
      f_prev = f_cur;
    }
  });
  for (auto& roots : per_branch)
    model.roots.insert(model.roots.end(), roots.begin(), roots.end());
  return model;
}

double dirichlet_norm(Complex z) {
  const double up = distance_to_ray(z, 1);
  const double down = distance_to_ray(z, -1);
  if (std::min(up, down) <= kDefaultSpectrumTol)
    throw SpectrumError("Dirichlet resolvent undefined on the spectrum");
  return std::max(1.0 / up, 1.0 / down);
}

DirichletUniformity dirichlet_bs_uniformity(const PotentialSpec& v, const std::vector<Complex>& zs) {
  DirichletUniformity report;
  report.z = zs;
  report.hs_norm.resize(zs.size());
  parallel_for(zs.size(), [&](std::size_t i) {
    report.hs_norm[i] = v.is_zero() ? 0.0
                                    : hs_norm(zs[i], v, bs_grid(v, std::abs(zs[i])),
                                              KernelKind::kDirichlet);
  });
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    report.max_hs = std::max(report.max_hs, report.hs_norm[i]);
    if (zs[i].real() > 0.0 && report.hs_norm[i] > 0.0) {
      x.push_back(zs[i].real());
      y.push_back(report.hs_norm[i]);
    }
  }
  if (x.size() >= 2) {
    report.slope = loglog_fit(x, y).first;
    report.flagged = report.slope > 0.1;
  }
  return report;
}

std::string gamma_to_csv(const std::vector<GammaCurve>& curves) {
  std::string out = "sigma1,sigma2,sigma3,r,re_alpha,im_alpha\n";
  for (const GammaCurve& c : curves) {
    for (const GammaSample& s : c.samples) {
      out += std::to_string(c.sigma[0]) + ',' + std::to_string(c.sigma[1]) + ',' +
             std::to_string(c.sigma[2]) + ',' + format_double(s.r) + ',' +
             format_double(s.alpha.real()) + ',' + format_double(s.alpha.imag()) + '\n';
    }
  }
  return out;
}

std::string delta_to_csv(const std::vector<DeltaModel>& rows) {
  std::string out = "re_alpha,im_alpha,re_lambda,im_lambda,exists\n";
  for (const DeltaModel& m : rows) {
    out += format_double(m.alpha.real()) + ',' + format_double(m.alpha.imag()) + ',' +
           format_double(m.lambda.real()) + ',' + format_double(m.lambda.imag()) + ',' +
           (m.exists ? "true" : "false") + '\n';
  }
  return out;
}

std::string step_to_csv(const std::vector<StepModel>& models) {
  std::string out = "b,index,lambda,residual\n";
  for (const StepModel& m : models) {
    for (std::size_t i = 0; i < m.roots.size(); ++i) {
      out += format_double(m.b) + ',' + std::to_string(i) + ',' +
             format_double(m.roots[i].lambda) + ',' + format_double(m.roots[i].residual) + '\n';
    }
  }
  return out;
}

}  // namespace pseudospec
