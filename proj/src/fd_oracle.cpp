#include "pseudospec/fd_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pseudospec/errors.hpp"
#include "pseudospec/resolvent_bounds.hpp"

namespace pseudospec {

namespace {

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

std::vector<Complex> start_vector(std::size_t n) {
  std::vector<Complex> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = static_cast<double>(j);
    v[j] = Complex{1.0 + 0.5 * std::sin(0.7 * t + 0.3), 0.25 * std::cos(1.3 * t)};
  }
  return v;
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s{0.0, 0.0};
  for (std::size_t j = 0; j < a.size(); ++j) s += std::conj(a[j]) * b[j];
  return s;
}

// Unconjugated bilinear form; the natural pairing for complex-symmetric matrices.
Complex bilinear(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s{0.0, 0.0};
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

double norm(std::span<const Complex> a) { return std::sqrt(std::real(dot(a, a))); }

void scale(std::span<Complex> a, Complex c) {
  for (auto& x : a) x *= c;
}

TridiagonalLU shifted_lu(const FDOperator& op, Complex z) {
  std::vector<Complex> off(op.n - 1);
  std::vector<Complex> diag(op.n);
  for (std::size_t j = 0; j + 1 < op.n; ++j) off[j] = op.coupling(j);
  for (std::size_t j = 0; j < op.n; ++j) diag[j] = op.diagonal[j] - z;
  return TridiagonalLU(off, diag, off);
}

Complex rayleigh_quotient(const FDOperator& op, std::span<const Complex> v) {
  const std::vector<Complex> av = op.apply(v);
  return bilinear(v, av) / bilinear(v, v);
}

FDOperator widen_box(const FDOperator& op, double factor) {
  std::size_t n = static_cast<std::size_t>(std::llround(factor * static_cast<double>(op.n + 1))) - 1;
  if (n % 2 == 0) ++n;
  FDOperator out = build_fd(op.potential, 0.5 * static_cast<double>(n + 1) * op.h, n, op.center_jump);
  return out;
}

}  // namespace

namespace {
FDPotential of_kind(FDPotentialKind kind) {
  FDPotential p;
  p.kind = kind;
  return p;
}
}  // namespace

FDPotential FDPotential::free() { return of_kind(FDPotentialKind::kFree); }
FDPotential FDPotential::sign() { return of_kind(FDPotentialKind::kSign); }
FDPotential FDPotential::dirichlet_split() { return of_kind(FDPotentialKind::kSignDirichletSplit); }

FDPotential FDPotential::step(double a, Complex b) {
  if (!(a > 0.0)) throw ConfigError("step half-width must be positive");
  FDPotential p = of_kind(FDPotentialKind::kStep);
  p.a = a;
  p.b = b;
  return p;
}

FDPotential FDPotential::sign_plus(double epsilon, PotentialSpec v) {
  FDPotential p = of_kind(FDPotentialKind::kSignPlus);
  p.epsilon = epsilon;
  p.perturbation = std::move(v);
  return p;
}

FDPotential FDPotential::smoothed(double a) {
  if (!(a > 0.0)) throw ConfigError("smoothing length must be positive");
  FDPotential p = of_kind(FDPotentialKind::kSmoothed);
  p.a = a;
  return p;
}

Complex FDPotential::value(double x) const {
  const Complex base{0.0, sgn(x)};
  switch (kind) {
    case FDPotentialKind::kFree:
      return {0.0, 0.0};
    case FDPotentialKind::kSign:
    case FDPotentialKind::kSignDirichletSplit:
      return base;
    case FDPotentialKind::kStep: {
      const double d = std::abs(x);
      if (d < a) return -b;
      if (d == a) return 0.5 * (base - b);
      return base;
    }
    case FDPotentialKind::kSignPlus:
      return base + epsilon * perturbation.value(x);
    case FDPotentialKind::kSmoothed:
      return SmoothedSignPotential{a}.value(x);
  }
  return base;
}

std::string FDPotential::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case FDPotentialKind::kFree: os << "FREE"; break;
    case FDPotentialKind::kSign: os << "SGN"; break;
    case FDPotentialKind::kSignDirichletSplit: os << "SGN_DIRICHLET_SPLIT"; break;
    case FDPotentialKind::kStep: os << "STEP(a=" << a << ",b=" << b << ")"; break;
    case FDPotentialKind::kSignPlus:
      os << "SGN_PLUS(eps=" << epsilon << "," << perturbation.describe() << ")";
      break;
    case FDPotentialKind::kSmoothed: os << "SMOOTHED(a=" << a << ")"; break;
  }
  return os.str();
}

std::vector<double> FDOperator::nodes() const {
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = node(j);
  return x;
}

double FDOperator::coupling(std::size_t j) const {
  if (potential.kind == FDPotentialKind::kSignDirichletSplit &&
      (j + 1 == center_index() || j == center_index())) {
    return 0.0;
  }
  return off_diagonal;
}

double FDOperator::norm_inf() const {
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double row = std::abs(diagonal[j]);
    if (j > 0) row += std::abs(coupling(j - 1));
    if (j + 1 < n) row += std::abs(coupling(j));
    best = std::max(best, row);
  }
  return best;
}

Matrix FDOperator::dense() const {
  Matrix a = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto i = static_cast<Eigen::Index>(j);
    a(i, i) = diagonal[j];
    if (j + 1 < n) {
      a(i, i + 1) = coupling(j);
      a(i + 1, i) = coupling(j);
    }
  }
  return a;
}

std::vector<Complex> FDOperator::apply(std::span<const Complex> v) const {
  std::vector<Complex> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex s = diagonal[j] * v[j];
    if (j > 0) s += coupling(j - 1) * v[j - 1];
    if (j + 1 < n) s += coupling(j) * v[j + 1];
    out[j] = s;
  }
  return out;
}

FDOperator build_fd(const FDPotential& potential, double half_length, std::size_t n,
                    std::optional<Complex> center_jump) {
  if (!(half_length > 0.0)) throw ConfigError("FD half length must be positive");
  if (n < 3) throw ConfigError("FD grid needs at least 3 interior nodes");
  if (n % 2 == 0) ++n;
  FDOperator op;
  op.potential = potential;
  op.half_length = half_length;
  op.n = n;
  op.h = 2.0 * half_length / static_cast<double>(n + 1);
  op.off_diagonal = -1.0 / (op.h * op.h);
  op.center_jump = center_jump;
  op.diagonal.resize(n);
  const double d0 = 2.0 / (op.h * op.h);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = j == op.center_index() ? 0.0 : op.node(j);
    op.diagonal[j] = d0 + potential.value(x);
  }
  if (center_jump) op.diagonal[op.center_index()] += *center_jump / op.h;
  return op;
}

FDOperator refine(const FDOperator& op) {
  return build_fd(op.potential, op.half_length, 2 * op.n + 1, op.center_jump);
}

double inverse_min_singular_value(const FDOperator& op, Complex z) {
  const TridiagonalLU lu = shifted_lu(op, z);
  const std::size_t n = op.n;
  constexpr int kBasis = 40;
  constexpr int kRestarts = 8;
  constexpr double kTol = 1e-11;

  std::vector<Complex> v = start_vector(n);
  scale(v, 1.0 / norm(v));
  double theta = 0.0;
  for (int restart = 0; restart < kRestarts; ++restart) {
    std::vector<std::vector<Complex>> basis;
    std::vector<double> alpha;
    std::vector<double> beta;
    basis.push_back(v);
    bool converged = false;
    Eigen::VectorXd ritz;
    for (int k = 0; k < kBasis; ++k) {
      std::vector<Complex> w = basis.back();
      lu.solve(w);
      lu.solve_adjoint(w);
      alpha.push_back(std::real(dot(basis.back(), w)));
      // Full reorthogonalisation, applied twice.
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) {
          const Complex c = dot(q, w);
          for (std::size_t j = 0; j < n; ++j) w[j] -= c * q[j];
        }
      }
      const double b = norm(w);

      const auto m = static_cast<Eigen::Index>(alpha.size());
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
      for (Eigen::Index i = 0; i < m; ++i) {
        t(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
      theta = es.eigenvalues()(m - 1);
      ritz = es.eigenvectors().col(m - 1);
      const double residual = b * std::abs(ritz(m - 1));
      if (residual <= kTol * theta || b <= 1e-300) {
        converged = true;
        break;
      }
      if (k + 1 == kBasis) break;
      scale(w, 1.0 / b);
      beta.push_back(b);
      basis.push_back(std::move(w));
    }
    if (converged) break;
    // Restart from the current Ritz vector.
    std::fill(v.begin(), v.end(), Complex{0.0, 0.0});
    for (Eigen::Index i = 0; i < ritz.size(); ++i) {
      const auto& q = basis[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < n; ++j) v[j] += ritz(i) * q[j];
    }
    scale(v, 1.0 / norm(v));
  }
  const double inv_sigma = std::sqrt(theta);
  if (!(inv_sigma < 1e14 / op.norm_inf()) || !std::isfinite(inv_sigma)) {
    throw SingularError("smallest singular value of A - z below 1e-14 ||A||");
  }
  return inv_sigma;
}

double inverse_min_singular_value_dense(const FDOperator& op, Complex z) {
  Matrix a = op.dense();
  a.diagonal().array() -= z;
  const std::vector<double> s = singular_values(std::move(a));
  const double smin = s.back();
  if (!(smin >= 1e-14 * op.norm_inf())) {
    throw SingularError("smallest singular value of A - z below 1e-14 ||A||");
  }
  return 1.0 / smin;
}

OracleResult resolvent_norm_fd(const FDOperator& op, Complex z, bool estimate_error) {
  OracleResult out;
  out.value = inverse_min_singular_value(op, z);
  if (estimate_error) {
    const double fine = inverse_min_singular_value(refine(op), z);
    out.estimated_discretization_error = std::abs(fine - out.value) * 4.0 / 3.0;
  }
  return out;
}

std::vector<Complex> solve_fd(const FDOperator& op, Complex z, std::span<const Complex> f) {
  if (f.size() != op.n) throw ConfigError("solve_fd: right-hand side has the wrong length");
  std::vector<Complex> u(f.begin(), f.end());
  shifted_lu(op, z).solve(u);
  return u;
}

std::vector<Complex> eigenvalues_fd(const FDOperator& op) {
  if (op.n > 6000) throw ConfigError("eigenvalues_fd: dense solve limited to n <= 6000");
  std::vector<Complex> w = eigenvalues(op.dense());
  std::sort(w.begin(), w.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return w;
}

Complex nearest_eigenvalue(const FDOperator& op, Complex shift) {
  std::vector<Complex> v = start_vector(op.n);
  scale(v, 1.0 / norm(v));
  Complex mu = shift;
  {
    // Fixed-shift inverse iteration until the Rayleigh quotient settles.
    TridiagonalLU lu = [&] {
      try {
        return shifted_lu(op, shift);
      } catch (const SingularError&) {
        return shifted_lu(op, shift + Complex{1e-10, 1e-10} * (1.0 + std::abs(shift)));
      }
    }();
    Complex previous = shift;
    for (int it = 0; it < 200; ++it) {
      lu.solve(v);
      scale(v, 1.0 / norm(v));
      mu = rayleigh_quotient(op, v);
      if (it >= 3 && std::abs(mu - previous) <= 1e-8 * (1.0 + std::abs(mu))) break;
      previous = mu;
    }
  }
  // Rounding in the quotient is of order eps ||A||, so that is the stopping floor.
  const double floor = 8.0 * std::numeric_limits<double>::epsilon() * op.norm_inf();
  for (int it = 0; it < 60; ++it) {
    std::optional<TridiagonalLU> lu;
    try {
      lu.emplace(shifted_lu(op, mu));
    } catch (const SingularError&) {
      return mu;
    }
    lu->solve(v);
    const double nv = norm(v);
    if (!std::isfinite(nv)) return mu;
    scale(v, 1.0 / nv);
    const Complex next = rayleigh_quotient(op, v);
    if (std::abs(next - mu) <= std::max(floor, 1e-14 * (1.0 + std::abs(mu)))) return next;
    mu = next;
  }
  throw ConvergenceError("Rayleigh quotient iteration did not settle");
}

EigenOracleResult nearest_eigenvalue_fd(const FDOperator& op, Complex shift) {
  const Complex coarse = nearest_eigenvalue(op, shift);
  const Complex fine = nearest_eigenvalue(refine(op), coarse);
  EigenOracleResult out;
  out.value = (4.0 * fine - coarse) / 3.0;
  out.estimated_discretization_error = std::abs(fine - coarse) / 3.0;
  return out;
}

std::vector<PhysicalEigenvalue> physical_eigenvalues(const FDOperator& op, double re_max,
                                                     double im_max, double box_tol,
                                                     double refine_tol) {
  const FDOperator fine = refine(op);
  const FDOperator wide = widen_box(op, 1.5);
  std::vector<PhysicalEigenvalue> out;
  for (const Complex lambda : eigenvalues_fd(op)) {
    if (lambda.real() > re_max || std::abs(lambda.imag()) > im_max) continue;
    PhysicalEigenvalue p;
    p.value = lambda;
    try {
      p.box_shift = std::abs(nearest_eigenvalue(wide, lambda) - lambda);
      if (p.box_shift >= box_tol) continue;
      p.refinement_shift = std::abs(nearest_eigenvalue(fine, lambda) - lambda);
    } catch (const Error&) {
      continue;
    }
    if (p.refinement_shift < refine_tol) out.push_back(p);
  }
  return out;
}

}  // namespace pseudospec
