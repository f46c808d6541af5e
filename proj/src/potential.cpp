#include "pseudospec/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pseudospec/errors.hpp"
#include "pseudospec/quadrature.hpp"

namespace pseudospec {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Gaussians are cut where |V| < 1e-300 relative to the amplitude.
constexpr double kGaussianCut = 26.3;

}  // namespace

PotentialSpec::PotentialSpec(GaussianPotential g) : kind_(g) {
  if (!(g.width > 0.0)) throw ConfigError("Gaussian width must be positive");
  finalize();
}

PotentialSpec::PotentialSpec(BumpPotential b) : kind_(b) {
  if (!(b.radius > 0.0)) throw ConfigError("bump radius must be positive");
  finalize();
}

PotentialSpec::PotentialSpec(StepPotential s) : kind_(s) {
  if (!(s.a > 0.0)) throw ConfigError("step half-width a must be positive");
  finalize();
}

PotentialSpec::PotentialSpec(SampledPotential s) : kind_(std::move(s)) {
  const auto& p = std::get<SampledPotential>(kind_);
  if (p.x.size() < 2 || p.x.size() != p.values.size())
    throw ConfigError("sampled potential needs >= 2 matching abscissae and values");
  for (std::size_t i = 1; i < p.x.size(); ++i)
    if (!(p.x[i] > p.x[i - 1])) throw ConfigError("sampled abscissae must increase strictly");
  finalize();
}

PotentialSpec PotentialSpec::delta_like(Complex alpha, double radius) {
  return PotentialSpec(BumpPotential{alpha / (2.0 * radius), 0.0, radius});
}

void PotentialSpec::finalize() {
  std::visit(Overloaded{
                 [&](const GaussianPotential& g) {
                   zero_ = g.amplitude == Complex{0.0, 0.0};
                   lower_ = -kGaussianCut * g.width;
                   upper_ = kGaussianCut * g.width;
                   // Truncate further where |V|^{1/2} is negligible for the Nystrom grids.
                   const double cut = std::sqrt(2.0 * std::log(1e16)) * g.width;
                   lower_ = -cut;
                   upper_ = cut;
                 },
                 [&](const BumpPotential& b) {
                   zero_ = b.amplitude == Complex{0.0, 0.0};
                   lower_ = b.center - b.radius;
                   upper_ = b.center + b.radius;
                 },
                 [&](const StepPotential& s) {
                   lower_ = -s.a;
                   upper_ = s.a;
                   zero_ = false;
                 },
                 [&](const SampledPotential& s) {
                   zero_ = std::all_of(s.values.begin(), s.values.end(),
                                       [](Complex v) { return v == Complex{0.0, 0.0}; });
                   lower_ = s.x.front();
                   upper_ = s.x.back();
                   breakpoints_.assign(s.x.begin() + 1, s.x.end() - 1);
                 },
             },
             kind_);
  // 0 always splits the kernel branches.
  if (lower_ < 0.0 && upper_ > 0.0) breakpoints_.push_back(0.0);
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());
  breakpoints_.erase(std::remove_if(breakpoints_.begin(), breakpoints_.end(),
                                    [&](double b) { return !(b > lower_ && b < upper_); }),
                     breakpoints_.end());
}

std::string PotentialSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const GaussianPotential& g) {
                   os << "GAUSSIAN(amplitude=" << g.amplitude << ",width=" << g.width << ")";
                 },
                 [&](const BumpPotential& b) {
                   os << "BUMP(amplitude=" << b.amplitude << ",center=" << b.center
                      << ",radius=" << b.radius << ")";
                 },
                 [&](const StepPotential& s) { os << "STEP_AB(a=" << s.a << ",b=" << s.b << ")"; },
                 [&](const SampledPotential& s) { os << "SAMPLED(n=" << s.x.size() << ")"; },
             },
             kind_);
  return os.str();
}

Complex PotentialSpec::value(double x) const {
  return std::visit(
      Overloaded{
          [&](const GaussianPotential& g) -> Complex {
            const double t = x / g.width;
            return g.amplitude * std::exp(-t * t);
          },
          [&](const BumpPotential& b) -> Complex {
            const double d = std::abs(x - b.center);
            if (d < b.radius) return b.amplitude;
            if (d == b.radius) return 0.5 * b.amplitude;
            return {0.0, 0.0};
          },
          [&](const StepPotential& s) -> Complex {
            const Complex inside = Complex{0.0, -sgn(x)} - s.b;
            const double d = std::abs(x);
            if (d < s.a) return inside;
            if (d == s.a) return 0.5 * inside;
            return {0.0, 0.0};
          },
          [&](const SampledPotential& s) -> Complex {
            if (x < s.x.front() || x > s.x.back()) return {0.0, 0.0};
            const auto it = std::upper_bound(s.x.begin(), s.x.end(), x);
            if (it == s.x.end()) return s.values.back();
            const std::size_t j = static_cast<std::size_t>(it - s.x.begin());
            const double t = (x - s.x[j - 1]) / (s.x[j] - s.x[j - 1]);
            return (1.0 - t) * s.values[j - 1] + t * s.values[j];
          },
      },
      kind_);
}

double PotentialSpec::abs_sqrt(double x) const { return std::sqrt(std::abs(value(x))); }

Complex PotentialSpec::half(double x) const {
  const Complex v = value(x);
  const double m = std::abs(v);
  if (m == 0.0) return {0.0, 0.0};
  return v / std::sqrt(m);
}

double PotentialSpec::l1_norm() const { return weighted_l1(-1); }

double PotentialSpec::weighted_l1(int power) const {
  if (zero_) return 0.0;
  if (const auto* s = std::get_if<SampledPotential>(&kind_)) {
    // Trapezoid rule on the sample grid.
    double total = 0.0;
    for (std::size_t i = 1; i < s->x.size(); ++i) {
      auto f = [&](std::size_t j) {
        const double w = power < 0 ? 1.0 : 1.0 + std::pow(std::abs(s->x[j]), power);
        return w * std::abs(s->values[j]);
      };
      total += 0.5 * (s->x[i] - s->x[i - 1]) * (f(i - 1) + f(i));
    }
    return total;
  }
  std::vector<double> breaks{lower_};
  breaks.insert(breaks.end(), breakpoints_.begin(), breakpoints_.end());
  breaks.push_back(upper_);
  const QuadratureGrid grid = composite_grid(breaks, (upper_ - lower_) / 64.0, 16);
  double total = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid.nodes[i];
    const double w = power < 0 ? 1.0 : 1.0 + std::pow(std::abs(x), power);
    total += grid.weights[i] * w * std::abs(value(x));
  }
  return total;
}

}  // namespace pseudospec
