#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pseudospec/errors.hpp"
#include "pseudospec/fd_oracle.hpp"
#include "pseudospec/spectral_kernel.hpp"

using namespace pseudospec;

TEST_CASE("grid layout") {
  const FDOperator op = build_fd(FDPotential::sign(), 10.0, 100);
  CHECK(op.n == 101);
  CHECK(op.node(op.center_index()) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(op.h == doctest::Approx(20.0 / 102.0));
  CHECK(op.diagonal[op.center_index()] == Complex{2.0 / (op.h * op.h), 0.0});
  const FDOperator fine = refine(op);
  CHECK(fine.n == 2 * op.n + 1);
  CHECK(fine.h == doctest::Approx(op.h / 2.0));
  CHECK_THROWS_AS(build_fd(FDPotential::sign(), -1.0, 11), ConfigError);
  CHECK_THROWS_AS(build_fd(FDPotential::sign(), 1.0, 2), ConfigError);
}

TEST_CASE("free box spectrum converges at second order") {
  const double L = 1.0;
  double previous = 0.0;
  for (std::size_t n : {99u, 199u, 399u}) {
    const FDOperator op = build_fd(FDPotential::free(), L, n);
    auto ev = eigenvalues_fd(op);
    std::sort(ev.begin(), ev.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    const double exact = std::pow(std::numbers::pi / (2.0 * L), 2);
    const double err = std::abs(ev.front() - exact);
    if (previous > 0.0) CHECK(previous / err == doctest::Approx(4.0).epsilon(0.05));
    previous = err;
  }
}

TEST_CASE("attractive point interaction") {
  const FDOperator op = build_fd(FDPotential::sign(), 20.0, 20001, Complex{-2.0, 0.0});
  const EigenOracleResult ev = nearest_eigenvalue_fd(op, {-0.7, 0.0});
  CHECK(std::abs(ev.value - Complex{-0.75, 0.0}) < 1e-5);
  CHECK(ev.estimated_discretization_error < 1e-5);
}

TEST_CASE("point interaction at -sqrt(2) sits at the origin") {
  const FDOperator op = build_fd(FDPotential::sign(), 40.0, 40001, Complex{-std::sqrt(2.0), 0.0});
  const Complex ev = nearest_eigenvalue_fd(op, {0.05, 0.0}).value;
  CHECK(std::abs(ev) < 1e-4);
}

TEST_CASE("repulsive point interaction has no eigenvalue near -0.75") {
  const FDOperator op = build_fd(FDPotential::sign(), 15.0, 1501, Complex{2.0, 0.0});
  const auto ev = physical_eigenvalues(op, 5.0, 0.99);
  for (const auto& e : ev) CHECK(std::abs(e.value - Complex{-0.75, 0.0}) > 0.1);
}

TEST_CASE("Lanczos agrees with dense SVD") {
  for (FDPotential pot : {FDPotential::sign(), FDPotential::step(1.0, {3.0, 0.0}), FDPotential::smoothed(1.0)}) {
    const FDOperator op = build_fd(pot, 8.0, 801);
    for (Complex z : {Complex{5.0, 0.2}, Complex{-1.0, 0.5}, Complex{0.3, 2.0}}) {
      const double lanczos = inverse_min_singular_value(op, z);
      const double dense = inverse_min_singular_value_dense(op, z);
      CHECK(lanczos == doctest::Approx(dense).epsilon(1e-9));
    }
  }
}

TEST_CASE("Dirichlet split has trivial pseudospectra") {
  const FDOperator op = build_fd(FDPotential::dirichlet_split(), 60.0, 6001);
  for (Complex z : {Complex{10.0, 0.0}, Complex{3.0, 0.9}, Complex{20.0, -0.5}}) {
    CHECK(resolvent_norm_fd(op, z, false).value * distance_to_spectrum(z) <= 1.05);
  }
}

TEST_CASE("normal region away from the strip") {
  const FDOperator op = build_fd(FDPotential::sign(), 40.0, 4001);
  const OracleResult r = resolvent_norm_fd(op, {-1.0, 0.0});
  CHECK(r.value <= 1.05 / distance_to_spectrum({-1.0, 0.0}));
  CHECK(r.estimated_discretization_error < 1e-3);
}

TEST_CASE("apply matches the dense matrix") {
  const FDOperator op = build_fd(FDPotential::step(1.0, {3.0, 0.5}), 4.0, 41, Complex{0.5, 0.0});
  std::vector<Complex> v(op.n);
  for (std::size_t j = 0; j < op.n; ++j) v[j] = Complex{std::sin(1.0 * j), std::cos(0.3 * j)};
  const auto w = op.apply(v);
  const Matrix a = op.dense();
  for (std::size_t i = 0; i < op.n; ++i) {
    Complex s{0.0, 0.0};
    for (std::size_t j = 0; j < op.n; ++j) s += a(i, j) * v[j];
    CHECK(std::abs(s - w[i]) < 1e-10 * (1.0 + std::abs(s)));
  }
}

TEST_CASE("singular shift is reported") {
  const FDOperator op = build_fd(FDPotential::free(), 1.0, 9);
  const Complex ev = eigenvalues_fd(op).front();
  CHECK_THROWS_AS(inverse_min_singular_value(op, ev), SingularError);
}
