#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pseudospec/errors.hpp"
#include "pseudospec/spectral_kernel.hpp"

using namespace pseudospec;

namespace {

// Reference values from tests/oracles/golden_values.py (mpmath, 50 digits).
void check_close(Complex got, Complex want, double rel = 1e-13) {
  CHECK(std::abs(got - want) <= rel * std::abs(want));
}

}  // namespace

TEST_CASE("wave numbers at -1+0.5i") {
  const WaveNumbers k = wave_numbers({-1.0, 0.5});
  check_close(k.k_plus, {1.0290855136357461, 0.24293413587832284});
  check_close(k.k_minus, {1.1838022718621541, -0.63355174916181655});
}

TEST_CASE("wave numbers have nonnegative real part") {
  for (double re : {-5.0, 0.0, 0.5, 3.0, 1e4})
    for (double im : {-3.0, -0.5, 0.0, 0.5, 3.0}) {
      const WaveNumbers k = wave_numbers({re, im});
      CHECK(k.k_plus.real() >= 0.0);
      CHECK(k.k_minus.real() >= 0.0);
    }
}

TEST_CASE("kernel against high-precision values") {
  check_close(resolvent_kernel(Complex{-1.0, 0.0}, 1.0, -1.0), {0.050558276864586481, 0.0});
  check_close(resolvent_kernel(Complex{2.0, 0.3}, 0.7, 1.9), {-1.0022906056856494, 0.21638232004600081});
  check_close(resolvent_kernel(Complex{2.0, 0.3}, -0.4, -2.2), {-0.47721675200552722, -0.33826881967599951});
  check_close(resolvent_kernel(Complex{-3.0, -2.0}, -1.5, 0.25),
              {0.0071924486974112311, -0.0092456424788857847});
  check_close(dirichlet_kernel(Complex{-1.0, 0.0}, 1.0, 2.0), {0.095619226616037787, -0.08978229923370615});
}

TEST_CASE("kernel is symmetric in x and y") {
  const Complex z{4.0, -0.2};
  for (double x : {-2.0, -0.3, 0.0, 0.8})
    for (double y : {-1.1, 0.0, 0.4, 3.0})
      CHECK(std::abs(resolvent_kernel(z, x, y) - resolvent_kernel(z, y, x)) < 1e-15);
}

TEST_CASE("Dirichlet kernel vanishes across the origin") {
  CHECK(dirichlet_kernel(Complex{1.0, 0.0}, 1.0, -1.0) == Complex{0.0, 0.0});
  CHECK(dirichlet_kernel(Complex{1.0, 0.0}, 0.0, 2.0) == Complex{0.0, 0.0});
}

TEST_CASE("kernel rejects points on the spectrum") {
  CHECK_THROWS_AS(resolvent_kernel(Complex{5.0, 1.0}, 0.0, 0.0), SpectrumError);
  CHECK_THROWS_AS(resolvent_kernel(Complex{0.5, -1.0}, 0.0, 0.0), SpectrumError);
  CHECK(kernel_admissible({0.0, 1.0}));
  CHECK(kernel_admissible({0.0, -1.0}));
  CHECK_FALSE(kernel_admissible({1.0, 1.0}));
}

TEST_CASE("region partition") {
  CHECK(classify_region({0.0, 1.5}) == Region::kDPlus);
  CHECK(classify_region({0.0, -1.5}) == Region::kDMinus);
  CHECK(classify_region({0.0, 0.3}) == Region::kDPlus);
  CHECK(classify_region({0.0, -0.3}) == Region::kDMinus);
  CHECK(classify_region({10.0, 0.5}) == Region::kW);
  CHECK(classify_region({10.0, 3.0}) == Region::kU);
  CHECK(classify_region({-5.0, 0.0}) == Region::kU);
  CHECK(classify_region({3.0, 1.0}) == Region::kSpectrum);
  CHECK(std::string(region_name(Region::kDPlus)) == "D_PLUS");
  CHECK(std::string(region_name(Region::kSpectrum)) == "SPECTRUM");
}

TEST_CASE("distance to the rays") {
  CHECK(distance_to_spectrum({2.0, 0.0}) == doctest::Approx(1.0));
  CHECK(distance_to_spectrum({-3.0, 1.0}) == doctest::Approx(3.0));
  CHECK(distance_to_spectrum({-3.0, 5.0}) == doctest::Approx(5.0));
}

TEST_CASE("asymptotic wave numbers approach the exact ones") {
  for (double tau : {1e2, 1e4}) {
    const Complex z{tau, 0.2};
    const AsymptoticWaveNumbers a = asymptotic_wave_numbers(z);
    const WaveNumbers k = wave_numbers(z);
    CHECK(std::abs(a.k_plus() - k.k_plus) < 5.0 / std::pow(tau, 1.5));
    CHECK(std::abs(a.k_minus() - k.k_minus) < 5.0 / std::pow(tau, 1.5));
  }
}

TEST_CASE("principal square root branch") {
  CHECK(principal_sqrt({-4.0, 0.0}) == Complex{0.0, 2.0});
  CHECK(principal_sqrt({-4.0, -0.0}).real() >= 0.0);
  CHECK(std::abs(principal_sqrt({0.0, 2.0}) - Complex{1.0, 1.0}) < 1e-15);
}
