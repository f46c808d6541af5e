#pragma once

// Wave numbers, resolvent kernels and the region map for
//   H = -d^2/dx^2 + i sgn(x)   on L^2(R),
// whose spectrum is the pair of rays [0, inf) + i{-1, +1}.

#include <complex>

namespace pseudospec {

using Complex = std::complex<double>;

inline constexpr double kDefaultSpectrumTol = 1e-12;

/// Principal square root, holomorphic off (-inf, 0]. Points on the cut map to
/// the positive imaginary axis regardless of the sign of a zero imaginary part.
Complex principal_sqrt(Complex w);

/// exp(w) - 1 without cancellation for small |w|.
Complex expm1(Complex w);

/// (exp(w) - 1) / w, equal to 1 at w = 0.
Complex expm1_ratio(Complex w);

struct WaveNumbers {
  Complex z;
  Complex k_plus;   // sqrt(i - z)
  Complex k_minus;  // sqrt(-i - z)
};

WaveNumbers wave_numbers(Complex z);

enum class Region { kDPlus, kDMinus, kU, kW, kSpectrum };

const char* region_name(Region r) noexcept;

/// Euclidean distance to the ray [0, inf) + i*sign.
double distance_to_ray(Complex z, int sign);

/// Distance to the spectrum [0, inf) + i{-1, +1}.
double distance_to_spectrum(Complex z);

/// True for z in the half-strip S = [0, inf) + i(-1, 1).
bool in_strip(Complex z);

/// Distance to the closed half-strip; zero inside.
double distance_to_closed_strip(Complex z);

/// Partition of the plane into D+, D-, W, U and the spectral rays.
/// The disks |z -+ i| <= 3/2 are closed and overlap near the origin; a point in
/// both is tagged by the sign of Im z (Im z >= 0 goes to D+).
Region classify_region(Complex z, double tol_spec = kDefaultSpectrumTol);

/// Kernel evaluation is admissible off the rays and at the ray endpoints
/// z = +-i, where the kernel extends continuously.
bool kernel_admissible(Complex z, double tol_spec = kDefaultSpectrumTol);

/// Integral kernel of (H - z)^{-1}. Throws SpectrumError on the rays.
Complex resolvent_kernel(Complex z, double x, double y, double tol_spec = kDefaultSpectrumTol);

/// Same as resolvent_kernel with precomputed wave numbers and no region check.
Complex resolvent_kernel(const WaveNumbers& k, double x, double y);

/// Integral kernel of (H^D - z)^{-1}, H^D carrying a Dirichlet condition at 0.
Complex dirichlet_kernel(Complex z, double x, double y, double tol_spec = kDefaultSpectrumTol);
Complex dirichlet_kernel(const WaveNumbers& k, double x, double y);

/// Two-term large-Re z expansions of the wave numbers, z = tau + i delta.
struct AsymptoticWaveNumbers {
  Complex leading_plus;     // i sqrt(tau)
  Complex leading_minus;    // -i sqrt(tau)
  Complex correction_plus;  // (1 - delta) / (2 sqrt(tau))
  Complex correction_minus; // (1 + delta) / (2 sqrt(tau))

  Complex k_plus() const { return leading_plus + correction_plus; }
  Complex k_minus() const { return leading_minus + correction_minus; }
};

/// Throws DomainError when Re z <= 0.
AsymptoticWaveNumbers asymptotic_wave_numbers(Complex z);

}  // namespace pseudospec
