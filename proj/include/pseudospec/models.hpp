#pragma once

#include <array>
#include <string>
#include <vector>

#include "pseudospec/potential.hpp"
#include "pseudospec/spectral_kernel.hpp"

namespace pseudospec {

// ---- point interaction at 0 with jump psi'(0+) - psi'(0-) = alpha psi(0) ----

struct DeltaModel {
  Complex alpha;
  Complex lambda;           // 1/alpha^2 - alpha^2/4
  bool exists = false;       // lambda off the rays [0, inf) +- i, equivalently alpha off Gamma
  bool bound_state = false;  // exists and k+(lambda) + k-(lambda) = -alpha
  double matching_residual = 0.0;  // |k+(lambda) + k-(lambda) + alpha|
};

/// ZeroCouplingError for alpha = 0.
DeltaModel delta_eigenvalue(Complex alpha, double tol_spec = kDefaultSpectrumTol);

using SignTriple = std::array<int, 3>;

/// The eight sign triples in lexicographic order (-1 before +1).
std::vector<SignTriple> all_sign_triples();

struct GammaSample {
  double r = 0.0;
  Complex alpha;
};

struct GammaCurve {
  SignTriple sigma{1, 1, 1};
  std::vector<GammaSample> samples;
};

/// sigma1 sqrt(-2(r + i sigma2) + 2 sigma3 sqrt(r (r + 2 i sigma2))), principal roots.
Complex gamma_point(const SignTriple& sigma, double r);

/// ConfigError on entries of sigma other than +-1 or negative r.
GammaCurve gamma_curve(const SignTriple& sigma, const std::vector<double>& r_samples);

/// Distance from alpha to the union of the eight branches, by sampling and
/// golden-section refinement in r.
double distance_to_gamma(Complex alpha);

// ---- step potential (-i sgn(x) - b) on [-a, a] ----

/// Left-hand side of the eigenvalue condition. Uses the sinh/cosh form when
/// lambda + b is a negative real and the sin/cos form otherwise; at
/// lambda = -b the sin(2a q)/q factor takes its limit 2a.
/// DomainError if |Im lambda| >= 1.
Complex implicit_residual(Complex lambda, double a, Complex b);

/// The sin/cos form with q the principal root of lambda + b.
Complex implicit_residual_trigonometric(Complex lambda, double a, Complex b);

/// The sinh/cosh form in terms of |lambda + b|; meaningful for lambda + b <= 0.
Complex implicit_residual_hyperbolic(Complex lambda, double a, Complex b);

/// -(sqrt(lambda^2 + 1) - (lambda + b)) / (2 sqrt(lambda + b) Im sqrt(lambda + i)) for
/// real lambda > -b; equals cot(2a sqrt(lambda + b)) at every real eigenvalue.
double cot_form_rhs(double lambda, double b);

struct StepRoot {
  double lambda = 0.0;
  double residual = 0.0;     // |implicit_residual|
  int branch = 0;            // k with 2a sqrt(lambda + b) in (k pi, (k+1) pi)
};

struct StepModel {
  double a = 1.0;
  double b = 0.0;
  double lambda_max = 0.0;
  std::vector<StepRoot> roots;  // ascending
};

/// All real roots in (-b, lambda_max], bracketed on the monotone branches of
/// cot(2a sqrt(lambda + b)) and bisected to 1e-12. ConfigError unless a > 0
/// and lambda_max > -b.
StepModel find_step_eigenvalues(double a, double b, double lambda_max);

// ---- Dirichlet-split operator ----

/// max(1/dist(z, [0, inf) + i), 1/dist(z, [0, inf) - i)). SpectrumError on the rays.
double dirichlet_norm(Complex z);

struct DirichletUniformity {
  std::vector<Complex> z;
  std::vector<double> hs_norm;
  double max_hs = 0.0;
  double slope = 0.0;     // log-log slope of hs_norm against Re z
  bool flagged = false;   // slope > 0.1
};

/// Hilbert-Schmidt norms of the Dirichlet Birman-Schwinger operator across
/// the sweep. Slope is fitted when at least two points have Re z > 0 and
/// nonzero norm.
DirichletUniformity dirichlet_bs_uniformity(const PotentialSpec& v, const std::vector<Complex>& zs);

// ---- CSV ----

std::string gamma_to_csv(const std::vector<GammaCurve>& curves);
std::string delta_to_csv(const std::vector<DeltaModel>& rows);
std::string step_to_csv(const std::vector<StepModel>& models);

}  // namespace pseudospec
