#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "pseudospec/errors.hpp"
#include "pseudospec/fd_oracle.hpp"
#include "pseudospec/quadrature.hpp"
#include "pseudospec/resolvent_bounds.hpp"

using namespace pseudospec;

TEST_CASE("bounds grow linearly along the real axis") {
  for (double tau : {50.0, 500.0, 5000.0}) {
    const Complex z{tau, 0.0};
    CHECK(pseudomode_lower_bound(z) / tau == doctest::Approx(1.0).epsilon(0.05));
    CHECK(schur_upper_bound(z) / (4.0 * tau) == doctest::Approx(1.0).epsilon(0.1));
  }
}

TEST_CASE("bound pair is ordered and records its methods") {
  for (Complex z : {Complex{10.0, 0.3}, Complex{-2.0, 0.0}, Complex{3.0, 2.5}, Complex{0.0, 1.5}}) {
    const BoundPair b = bound_pair(z);
    CHECK(b.lower <= b.upper);
    CHECK(b.methods != 0u);
  }
  CHECK((bound_pair({10.0, 0.3}).methods & kPseudomode) != 0u);
  CHECK_THROWS_AS(bound_pair({4.0, 1.0}), SpectrumError);
}

TEST_CASE("numerical-range bound is the inverse distance to the strip") {
  CHECK(numrange_bound({-2.0, 0.0}) == doctest::Approx(0.5));
  CHECK(numrange_bound({3.0, 3.0}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(numrange_bound({3.0, 0.5}), DomainError);
}

TEST_CASE("apply_resolvent agrees with the FD solve") {
  const Complex z{2.0, 0.4};
  const double L = 100.0;
  const FDOperator op = build_fd(FDPotential::sign(), L, 40001);
  const QuadratureGrid grid = midpoint_grid(L, op.n);
  std::vector<Complex> f(op.n);
  for (std::size_t j = 0; j < op.n; ++j) {
    const double x = grid.nodes[j];
    f[j] = std::exp(-(x - 0.5) * (x - 0.5)) * Complex{1.0, x};
  }
  const auto u = apply_resolvent(z, grid, f);
  const auto v = solve_fd(op, z, f);
  std::vector<Complex> d(op.n);
  for (std::size_t j = 0; j < op.n; ++j) d[j] = u[j] - v[j];
  CHECK(l2_norm(grid, d) / l2_norm(grid, v) < 1e-4);
}

TEST_CASE("resolvent norm lies between the bounds") {
  const Complex z{30.0, 0.2};
  const FDOperator op = build_fd(FDPotential::sign(), 200.0, 24001);
  const double fd = resolvent_norm_fd(op, z, false).value;
  CHECK(pseudomode_lower_bound(z) <= fd * 1.01);
  CHECK(fd <= schur_upper_bound(z));
}

TEST_CASE("smoothed pseudomode ratio grows like a quarter power") {
  const double r1 = regularized_pseudomode_ratio({1e2, 0.0}, 1.0).ratio;
  const double r2 = regularized_pseudomode_ratio({1e4, 0.0}, 1.0).ratio;
  const double slope = std::log(r2 / r1) / std::log(100.0);
  CHECK(slope > 0.2);
  CHECK(slope < 0.3);
  CHECK_THROWS_AS(regularized_pseudomode_ratio({-5.0, 0.0}, 1.0), DomainError);
}

TEST_CASE("smoothed potential profile") {
  const SmoothedSignPotential v{2.0};
  CHECK(v.value(-3.0) == Complex{0.0, -1.0});
  CHECK(v.value(1.0) == Complex{0.0, 1.0});
  CHECK(std::abs(v.value(-1.0)) < 1e-15);
  CHECK(std::abs(v.difference(0.5)) == 0.0);
}
