#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pseudospec/birman_schwinger.hpp"
#include "pseudospec/errors.hpp"

using namespace pseudospec;

namespace {

const PotentialSpec kGaussian(GaussianPotential{{1.0, 0.0}, 1.0});

}  // namespace

TEST_CASE("zero potential gives a zero operator") {
  const PotentialSpec zero(GaussianPotential{{0.0, 0.0}, 1.0});
  CHECK(zero.is_zero());
  const Complex z{2.0, 0.3};
  CHECK(hs_norm(z, zero, bs_grid(kGaussian, std::abs(z))) == 0.0);
}

TEST_CASE("zero coupling gives unit determinant") {
  const Complex z{2.0, 0.3};
  const Determinant d = bs_determinant(z, 0.0, kGaussian, bs_grid(kGaussian, std::abs(z)));
  CHECK(std::abs(d.value() - Complex{1.0, 0.0}) < 1e-14);
}

TEST_CASE("Hilbert-Schmidt norm is bounded by the kernel sup times the L1 norm") {
  for (Complex z : {Complex{5.0, 0.2}, Complex{-1.0, 0.0}, Complex{100.0, -0.5}}) {
    const double hs = hs_norm(z, kGaussian, bs_grid(kGaussian, std::abs(z)));
    CHECK(hs <= kernel_sup_bound(z) * kGaussian.l1_norm() * (1.0 + 1e-8));
    CHECK(hs > 0.0);
  }
}

TEST_CASE("Hilbert-Schmidt norm is stable under grid refinement") {
  const Complex z{30.0, 0.1};
  BSGridOptions fine;
  fine.panels_per_wavelength = 6.0;
  const double a = hs_norm(z, kGaussian, bs_grid(kGaussian, std::abs(z)));
  const double b = hs_norm(z, kGaussian, bs_grid(kGaussian, std::abs(z), fine));
  CHECK(a == doctest::Approx(b).epsilon(1e-4));
}

TEST_CASE("singular part is rank one with the predicted norm") {
  const Complex z{400.0, 0.0};
  const QuadratureGrid g = bs_grid(kGaussian, std::abs(z));
  const Matrix l = assemble_L(z, kGaussian, g);
  const auto sv = singular_values(l);
  CHECK(sv[1] < 1e-10 * sv[0]);
  const DecompositionDiagnostics d = decomposition_diagnostics(z, kGaussian, g);
  CHECK(d.l_hs == doctest::Approx(20.0 * kGaussian.l1_norm()));
  CHECK(d.l_hs_quadrature == doctest::Approx(d.l_hs).epsilon(1e-8));
  CHECK(d.m_hs < 0.1 * d.k_hs);
  CHECK_THROWS_AS(decomposition_diagnostics({1.0, 2.0}, kGaussian, g), DomainError);
}

TEST_CASE("step potential eigenvalues are detected and midpoints are not") {
  const PotentialSpec step(StepPotential{1.0, {3.0, 0.0}});
  const QuadratureGrid g = bs_grid(step, 3.0);
  for (double root : {-2.0166687695104515, 0.6518565898644353}) {
    CHECK(detect_eigenvalue({root, 0.0}, 1.0, step, g).is_eigenvalue);
  }
  CHECK_FALSE(detect_eigenvalue({-0.7, 0.0}, 1.0, step, g).is_eigenvalue);
}

TEST_CASE("secant search finds the step roots") {
  const PotentialSpec step(StepPotential{1.0, {3.0, 0.0}});
  const RootSearch r = find_eigenvalues(1.0, step, SearchBox{-3.0, 10.0, -0.9, 0.9},
                                        {{-1.9, 0.0}, {0.7, 0.05}, {8.0, -0.02}});
  REQUIRE(r.roots.size() == 3);
  CHECK(r.roots[0].z.real() == doctest::Approx(-2.0166687695).epsilon(1e-8));
  CHECK(r.roots[1].z.real() == doctest::Approx(0.6518565899).epsilon(1e-8));
  CHECK(r.roots[2].z.real() == doctest::Approx(8.0944789919).epsilon(1e-8));
  for (const BSRoot& root : r.roots) CHECK(std::abs(root.z.imag()) < 1e-8);
}

TEST_CASE("complex potential roots come in conjugate pairs under PT symmetry") {
  const PotentialSpec v(GaussianPotential{{-3.0, 0.0}, 1.0});
  const RootSearch r = find_eigenvalues(1.0, v, SearchBox{-5.0, 5.0, -0.99, 0.99}, {{-0.5, 0.3}, {-0.5, -0.3}});
  for (const BSRoot& root : r.roots) {
    bool paired = false;
    for (const BSRoot& other : r.roots)
      if (std::abs(other.z - std::conj(root.z)) < 1e-6) paired = true;
    CHECK(paired);
  }
}

TEST_CASE("weak-coupling rate of a delta-like bump") {
  const RateFit fit = weak_coupling_rate(PotentialSpec::delta_like({-2.0, 0.0}), {0.5, 0.25, 0.125});
  CHECK(fit.slope == doctest::Approx(-2.0).epsilon(0.15));
  CHECK_THROWS_AS(weak_coupling_rate(kGaussian, {0.5, 0.6, 0.1}), ConfigError);
}

TEST_CASE("log-log fit recovers a power law") {
  const auto [slope, intercept] = loglog_fit({1.0, 10.0, 100.0}, {3.0, 3.0 / std::sqrt(10.0), 0.3});
  CHECK(slope == doctest::Approx(-0.5));
  CHECK(std::exp(intercept) == doctest::Approx(3.0));
}

TEST_CASE("operator is undefined on the spectrum") {
  CHECK_THROWS_AS(hs_norm({3.0, 1.0}, kGaussian, bs_grid(kGaussian, 3.0)), SpectrumError);
}
