#include <cmath>

#include <doctest.h>

#include "hypchrom/errors.hpp"
#include "hypchrom/quadrature.hpp"
#include "hypchrom/spherical.hpp"
#include "oracles.hpp"

using namespace hypchrom;
using doctest::Approx;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (const int n : {1, 2, 5, 16, 64, 256}) {
    const auto rule = gauss_legendre(n);
    REQUIRE(rule->nodes.size() == static_cast<std::size_t>(n));
    double weight_sum = 0.0;
    for (const double w : rule->weights) weight_sum += w;
    CHECK(weight_sum == Approx(2.0).epsilon(1e-14));
    for (int k = 0; k < std::min(2 * n, 40); ++k) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += rule->weights[i] * std::pow(rule->nodes[i], k);
      const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
      CHECK(sum == Approx(exact).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("rules are cached and ordered") {
  const auto a = gauss_legendre(32);
  const auto b = gauss_legendre(32);
  CHECK(a.get() == b.get());
  for (std::size_t i = 1; i < a->nodes.size(); ++i) CHECK(a->nodes[i - 1] < a->nodes[i]);
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("integrate_singular") {
  const QuadratureConfig quad;
  CHECK(integrate_singular([](double) { return 1.0; }, quad) == Approx(1.0).epsilon(1e-14));
  CHECK(integrate_singular([](double, double tail) { return 1.0 / std::sqrt(tail); }, quad) ==
        Approx(2.0).epsilon(quad.rel_tol));
  CHECK(integrate_singular([](double v) { return 1.0 / std::sqrt(1.0 - v); }, quad) ==
        Approx(2.0).epsilon(1e-9));
  // Int_0^1 v^3 / sqrt(1 - v) = 32/35.
  CHECK(integrate_singular([](double v, double tail) { return v * v * v / std::sqrt(tail); },
                           quad) == Approx(32.0 / 35.0).epsilon(1e-12));
  // Lower limit: Int_{1/2}^1 (1 - v)^{-1/2} = sqrt(2).
  CHECK(integrate_singular([](double, double tail) { return 1.0 / std::sqrt(tail); }, quad,
                           {.lower = 0.5}) == Approx(std::sqrt(2.0)).epsilon(1e-12));

  SUBCASE("normaliser of f_d against the high-precision reference") {
    const FdProfile p2(2.0);
    const double value = integrate_singular(
        [&p2](double v, double tail) { return p2.density(v, tail); }, quad);
    CHECK(value == Approx(oracle::kNormalizerD2).epsilon(1e-12));
    CHECK(FdProfile(1.0).normalizer() == Approx(oracle::kNormalizerD1).epsilon(1e-12));
  }

  SUBCASE("oscillatory integrands with a starting panel count") {
    // Int_0^1 cos(200 v) dv
    const double value = integrate_singular([](double v) { return std::cos(200.0 * v); }, quad,
                                            {.min_panels = 4});
    CHECK(value == Approx(std::sin(200.0) / 200.0).epsilon(1e-10).scale(1e-2));
  }
}

TEST_CASE("non-convergence and bad configurations are reported") {
  QuadratureConfig quad;
  quad.max_refinements = 1;
  // A 1/(1 - v) singularity is not integrable; doubling never settles.
  CHECK_THROWS_AS(integrate_singular([](double, double tail) { return 1.0 / tail; }, quad),
                  QuadratureError);

  QuadratureConfig bad;
  bad.base_nodes = 8;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = {};
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS(integrate_singular([](double) { return 1.0; }, QuadratureConfig{}, {.lower = 2.0}),
                  DomainError);
}
