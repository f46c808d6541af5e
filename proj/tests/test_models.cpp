#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pseudospec/errors.hpp"
#include "pseudospec/models.hpp"

using namespace pseudospec;

TEST_CASE("point interaction eigenvalue") {
  const DeltaModel m = delta_eigenvalue({2.0, 0.0});
  CHECK(m.lambda == Complex{-0.75, 0.0});
  CHECK(m.exists);
  CHECK_FALSE(m.bound_state);
  const DeltaModel attractive = delta_eigenvalue({-2.0, 0.0});
  CHECK(attractive.exists);
  CHECK(attractive.bound_state);
  CHECK(attractive.matching_residual < 1e-12);
  CHECK(std::abs(delta_eigenvalue({std::sqrt(2.0), 0.0}).lambda) < 1e-15);
  CHECK_THROWS_AS(delta_eigenvalue({0.0, 0.0}), ZeroCouplingError);
}

TEST_CASE("curve points map onto the rays") {
  for (const SignTriple& s : all_sign_triples()) {
    for (double r : {0.0, 0.01, 0.5, 3.0, 9.0}) {
      const Complex a = gamma_point(s, r);
      const Complex lambda = delta_eigenvalue(a, 1e-9).lambda;
      CHECK(std::abs(std::abs(lambda.imag()) - 1.0) < 1e-10);
      CHECK(lambda.real() > -1e-10);
      CHECK_FALSE(delta_eigenvalue(a, 1e-9).exists);
    }
  }
}

TEST_CASE("curve at r = 0 sends lambda to the ray endpoint") {
  const Complex a = gamma_point({1, 1, 1}, 0.0);
  const Complex lambda = 1.0 / (a * a) - a * a / 4.0;
  CHECK(std::abs(std::abs(lambda) - 1.0) < 1e-14);
  CHECK(std::abs(lambda.real()) < 1e-14);
}

TEST_CASE("sign flip of the first entry negates the curve") {
  for (double r : {0.2, 1.0, 4.0})
    CHECK(std::abs(gamma_point({-1, 1, -1}, r) + gamma_point({1, 1, -1}, r)) < 1e-15);
  CHECK_THROWS_AS(gamma_curve({2, 1, 1}, {0.0}), ConfigError);
  CHECK_THROWS_AS(gamma_curve({1, 1, 1}, {-1.0}), ConfigError);
}

TEST_CASE("distance to the curve") {
  CHECK(distance_to_gamma(gamma_point({1, -1, 1}, 0.7)) < 1e-9);
  CHECK(distance_to_gamma({2.0, 0.0}) > 0.1);
}

TEST_CASE("step residual is continuous at lambda = -b") {
  const double a = 1.0;
  const Complex b{3.0, 0.0};
  const Complex at = implicit_residual({-3.0, 0.0}, a, b);
  CHECK(std::abs(implicit_residual({-3.0 + 1e-9, 0.0}, a, b) - at) < 1e-6);
  CHECK(std::abs(implicit_residual({-3.0 - 1e-9, 0.0}, a, b) - at) < 1e-6);
}

TEST_CASE("trigonometric and hyperbolic forms agree below -b") {
  const double a = 1.0;
  const Complex b{3.0, 0.0};
  for (double lambda : {-3.5, -4.0, -7.0}) {
    const Complex t = implicit_residual_trigonometric({lambda, 0.0}, a, b);
    const Complex h = implicit_residual_hyperbolic({lambda, 0.0}, a, b);
    CHECK(std::abs(t - h) < 1e-10 * (1.0 + std::abs(h)));
  }
  CHECK_THROWS_AS(implicit_residual({1.0, 1.0}, a, b), DomainError);
}

TEST_CASE("cot form tends to b for large lambda") {
  CHECK(cot_form_rhs(1e6, 3.0) == doctest::Approx(3.0).epsilon(1e-5));
  for (const StepRoot& r : find_step_eigenvalues(1.0, 3.0, 60.0).roots) {
    const double q = std::sqrt(r.lambda + 3.0);
    CHECK(std::cos(2.0 * q) / std::sin(2.0 * q) == doctest::Approx(cot_form_rhs(r.lambda, 3.0)).epsilon(1e-8));
  }
}

TEST_CASE("step model roots") {
  const StepModel m = find_step_eigenvalues(1.0, 3.0, 60.0);
  REQUIRE(m.roots.size() == 5);
  const double expected[] = {-2.0166687695, 0.6518565899, 8.0944789919, 20.8616631447, 38.6078400548};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(m.roots[i].lambda == doctest::Approx(expected[i]).epsilon(1e-9));
    CHECK(m.roots[i].residual < 1e-8);
  }
  CHECK(find_step_eigenvalues(1.0, 3.0, 120.0).roots.size() == 7);
  CHECK(find_step_eigenvalues(1.0, 3.0, 240.0).roots.size() == 10);
  CHECK_THROWS_AS(find_step_eigenvalues(0.0, 3.0, 60.0), ConfigError);
}

TEST_CASE("Dirichlet norm and uniformity") {
  CHECK(dirichlet_norm({50.0, 0.5}) == doctest::Approx(2.0));
  CHECK(dirichlet_norm({-1.0, 0.0}) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(dirichlet_norm({3.0, 1.0}), SpectrumError);
  const PotentialSpec v(GaussianPotential{{1.0, 0.0}, 1.0});
  const DirichletUniformity u = dirichlet_bs_uniformity(v, {{1e2, 0.0}, {1e3, 0.0}, {1e4, 0.0}});
  CHECK_FALSE(u.flagged);
  CHECK(u.max_hs < 5.0);
}

TEST_CASE("CSV layouts") {
  CHECK(delta_to_csv({delta_eigenvalue({2.0, 0.0})}) ==
        "re_alpha,im_alpha,re_lambda,im_lambda,exists\n2,0,-0.75,0,true\n");
  CHECK(gamma_to_csv({gamma_curve({1, 1, 1}, {0.0})}).rfind("sigma1,sigma2,sigma3,r,re_alpha,im_alpha\n1,1,1,0,", 0) == 0);
  CHECK(step_to_csv({find_step_eigenvalues(1.0, 3.0, 1.0)}).rfind("b,index,lambda,residual\n3,0,-2.01666876", 0) == 0);
}
