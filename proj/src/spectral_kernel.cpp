#include "pseudospec/spectral_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pseudospec/errors.hpp"

namespace pseudospec {

namespace {

constexpr Complex kI{0.0, 1.0};

[[noreturn]] void throw_on_ray(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "z = " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
     << "i lies on the spectrum [0,inf)+i{-1,+1}";
  throw SpectrumError(os.str());
}

// (e^{-k a} - e^{-k b}) / (2k) for 0 <= a <= b, finite as k -> 0.
Complex difference_term(Complex k, double a, double b) {
  const double d = b - a;
  return std::exp(-k * a) * (0.5 * d) * expm1_ratio(-k * d);
}

}  // namespace

Complex principal_sqrt(Complex w) {
  const double re = w.real();
  const double im = w.imag();
  if (re == 0.0 && im == 0.0) return {0.0, 0.0};
  const double t = std::sqrt(0.5 * (std::abs(re) + std::hypot(re, im)));
  if (re >= 0.0) return {t, im / (2.0 * t)};
  // Left half-plane: the imaginary part carries the sign of Im w, with the cut
  // itself (Im w = +-0) sent to the upper half-plane.
  const double sign = im < 0.0 ? -1.0 : 1.0;
  return {std::abs(im) / (2.0 * t), sign * t};
}

Complex expm1(Complex w) {
  const double a = w.real();
  const double b = w.imag();
  const double s = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

Complex expm1_ratio(Complex w) {
  if (w == Complex{0.0, 0.0}) return {1.0, 0.0};
  return expm1(w) / w;
}

WaveNumbers wave_numbers(Complex z) {
  return {z, principal_sqrt(kI - z), principal_sqrt(-kI - z)};
}

const char* region_name(Region r) noexcept {
  switch (r) {
    case Region::kDPlus: return "D_PLUS";
    case Region::kDMinus: return "D_MINUS";
    case Region::kU: return "U";
    case Region::kW: return "W";
    case Region::kSpectrum: return "SPECTRUM";
  }
  return "?";
}

double distance_to_ray(Complex z, int sign) {
  const Complex tip{0.0, static_cast<double>(sign)};
  if (z.real() >= 0.0) return std::abs(z.imag() - tip.imag());
  return std::abs(z - tip);
}

double distance_to_spectrum(Complex z) {
  return std::min(distance_to_ray(z, +1), distance_to_ray(z, -1));
}

bool in_strip(Complex z) { return z.real() >= 0.0 && std::abs(z.imag()) < 1.0; }

double distance_to_closed_strip(Complex z) {
  const double dx = z.real() < 0.0 ? -z.real() : 0.0;
  const double dy = std::max(0.0, std::abs(z.imag()) - 1.0);
  return std::hypot(dx, dy);
}

Region classify_region(Complex z, double tol_spec) {
  if (distance_to_spectrum(z) <= tol_spec) return Region::kSpectrum;
  const bool plus = std::abs(z - kI) <= 1.5;
  const bool minus = std::abs(z + kI) <= 1.5;
  if (plus && minus) return z.imag() >= 0.0 ? Region::kDPlus : Region::kDMinus;
  if (plus) return Region::kDPlus;
  if (minus) return Region::kDMinus;
  if (in_strip(z)) return Region::kW;
  return Region::kU;
}

bool kernel_admissible(Complex z, double tol_spec) {
  return distance_to_spectrum(z) > tol_spec || std::abs(z - kI) <= tol_spec ||
         std::abs(z + kI) <= tol_spec;
}

Complex resolvent_kernel(const WaveNumbers& k, double x, double y) {
  const Complex sum = k.k_plus + k.k_minus;
  if (x >= 0.0 && y <= 0.0) return std::exp(-k.k_plus * x + k.k_minus * y) / sum;
  if (x <= 0.0 && y >= 0.0) return std::exp(k.k_minus * x - k.k_plus * y) / sum;
  // Same side: 1/(2k)(e^{-k|x-y|} - e^{-k|x+y|}) + e^{-k|x+y|}/(k+ + k-), which is
  // the four-branch formula rearranged so that k -> 0 stays finite.
  const Complex kk = x >= 0.0 ? k.k_plus : k.k_minus;
  const double a = std::abs(x - y);
  const double b = std::abs(x + y);
  return difference_term(kk, a, b) + std::exp(-kk * b) / sum;
}

Complex resolvent_kernel(Complex z, double x, double y, double tol_spec) {
  if (!kernel_admissible(z, tol_spec)) throw_on_ray(z);
  return resolvent_kernel(wave_numbers(z), x, y);
}

Complex dirichlet_kernel(const WaveNumbers& k, double x, double y) {
  if (x > 0.0 && y > 0.0) return difference_term(k.k_plus, std::abs(x - y), x + y);
  if (x < 0.0 && y < 0.0) return difference_term(k.k_minus, std::abs(x - y), -(x + y));
  return {0.0, 0.0};
}

Complex dirichlet_kernel(Complex z, double x, double y, double tol_spec) {
  if (!kernel_admissible(z, tol_spec)) throw_on_ray(z);
  return dirichlet_kernel(wave_numbers(z), x, y);
}

AsymptoticWaveNumbers asymptotic_wave_numbers(Complex z) {
  if (!(z.real() > 0.0)) throw DomainError("asymptotic expansion requires Re z > 0");
  const double tau = z.real();
  const double delta = z.imag();
  const double root = std::sqrt(tau);
  return {Complex{0.0, root}, Complex{0.0, -root}, Complex{(1.0 - delta) / (2.0 * root), 0.0},
          Complex{(1.0 + delta) / (2.0 * root), 0.0}};
}

}  // namespace pseudospec
