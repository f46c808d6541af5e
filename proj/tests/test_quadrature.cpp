#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "pseudospec/errors.hpp"
#include "pseudospec/quadrature.hpp"

using namespace pseudospec;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  for (int order : {1, 4, 10, 22}) {
    const GaussRule rule = gauss_legendre(order);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(order));
    for (int p = 0; p < 2 * order; ++p) {
      double sum = 0.0;
      for (int i = 0; i < order; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], p);
      const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
      CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("composite grid respects breakpoints and panel width") {
  const std::vector<double> breaks{-3.0, 0.0, 1.0, 3.0};
  const QuadratureGrid g = composite_grid(breaks, 0.4, 6);
  CHECK(g.lower() == -3.0);
  CHECK(g.upper() == 3.0);
  CHECK(g.weight_sum() == doctest::Approx(6.0).epsilon(1e-14));
  for (std::size_t p = 0; p < g.panel_count(); ++p)
    CHECK(g.panel_edges[p + 1] - g.panel_edges[p] <= 0.4 + 1e-15);
  for (double b : breaks)
    CHECK(std::find(g.panel_edges.begin(), g.panel_edges.end(), b) != g.panel_edges.end());
  CHECK(g.size() == g.panel_count() * 6);
}

TEST_CASE("composite grid integrates a Gaussian") {
  const std::vector<double> breaks{-10.0, 10.0};
  const QuadratureGrid g = composite_grid(breaks, 0.5, 8);
  std::vector<Complex> f(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = std::exp(-0.5 * g.nodes[i] * g.nodes[i]);
  CHECK(l2_norm_squared(g, f) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("midpoint grid matches the FD node layout") {
  const QuadratureGrid g = midpoint_grid(2.0, 7);
  CHECK(g.size() == 7);
  CHECK(g.nodes[3] == doctest::Approx(0.0));
  CHECK(g.weights[0] == doctest::Approx(0.5));
}

TEST_CASE("resolvent grid reaches the decay threshold") {
  const Complex z{25.0, 0.0};
  const QuadratureGrid g = resolvent_grid(z);
  CHECK(g.half_length() >= 150.0);
  CHECK(std::find(g.panel_edges.begin(), g.panel_edges.end(), 0.0) != g.panel_edges.end());
}

TEST_CASE("invalid grids are rejected") {
  CHECK_THROWS_AS(midpoint_grid(-1.0, 5), ConfigError);
  CHECK_THROWS_AS(gauss_legendre(0), ConfigError);
}
