#include <cmath>

#include "doctest.h"
#include "dsg/density_value.hpp"
#include "dsg/generators.hpp"
#include "dsg/oracles.hpp"
#include "test_util.hpp"

using namespace dsg;
using namespace dsg_test;

TEST_CASE("huge eps collapses to the clamped density") {
  Graph g = k4();
  auto est = private_density_value(g, 1e9, ValueMode::whp, 3);
  // x floors at 0.51, rho = 1.5 dominates, Laplace scale is negligible.
  CHECK(est.clamp == doctest::Approx(0.51));
  CHECK(est.estimate == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("clamp levels per mode") {
  RngRoot root(1);
  auto s = root.stream({1});
  auto whp = private_density_value(0.0, 1000, 1.0, ValueMode::whp, s);
  CHECK(whp.clamp == doctest::Approx(std::sqrt(std::log(1000.0))));
  auto exp_mode =
      private_density_value(0.0, 1000, 1.0, ValueMode::expectation, s);
  CHECK(exp_mode.clamp == doctest::Approx(1.0));
  CHECK(exp_mode.budget.pure_eps == doctest::Approx(1.0));
  CHECK_THROWS_AS(private_density_value(0.0, 1000, 0.0, ValueMode::whp, s),
                  std::invalid_argument);
}

TEST_CASE("expectation-mode mean absolute error") {
  // Empty graph: rho = 0, so the error is the clamp plus Laplace noise.
  RngRoot root(7);
  auto s = root.stream({2});
  const double eps = 1.0;
  const int trials = 10000;
  double abs_err = 0.0;
  for (int i = 0; i < trials; ++i) {
    auto est = private_density_value(0.0, 1000, eps, ValueMode::expectation, s);
    abs_err += std::fabs(est.estimate);
  }
  CHECK(abs_err / trials <= 3.0 * std::sqrt(1.0 / eps));
}

TEST_CASE("whp-mode error bound at n=1000") {
  Graph g = gnp(1000, 0.01, 42);
  double rho = exact_dsg_flow(g).value();
  RngRoot root(9);
  auto s = root.stream({3});
  const double eps = 1.0;
  double bound = 5.0 * std::sqrt(std::log(1000.0) / eps);
  int ok = 0;
  const int trials = 1000;
  for (int i = 0; i < trials; ++i) {
    auto est = private_density_value(rho, 1000, eps, ValueMode::whp, s);
    if (std::fabs(est.estimate - rho) <= bound) ++ok;
  }
  CHECK(ok >= 990);
}

TEST_CASE("oversized graphs are refused with instructions") {
  Graph g = gnp(50, 0.2, 4);
  CHECK_THROWS_WITH_AS(
      private_density_value(g, 1.0, ValueMode::whp, 1, /*oracle_limit=*/10),
      doctest::Contains("supply the exact density"), std::invalid_argument);
}

TEST_CASE("clamped density sensitivity, exhaustive") {
  std::vector<double> xs{1.0, 1.5, 2.0};
  auto report = rho_x_sensitivity_check(5, xs);
  CHECK(report.ok);
  CHECK(report.pairs_checked > 0);
  CHECK(report.worst_slack >= -1e-12);

  // Spot cases of the sensitivity argument.
  // K2 vs empty on 2 vertices at x = 1: both clamp to 1, difference 0.
  Graph k2 = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  Graph e2 = Graph::from_edges(2, {});
  double r1 = std::max(exact_dsg_bruteforce(k2).density.value(), 1.0);
  double r2 = std::max(exact_dsg_bruteforce(e2).density.value(), 1.0);
  CHECK(std::fabs(r1 - r2) == doctest::Approx(0.0));

  // Densities at most x-1 on both sides clamp to x: difference 0.
  Graph p = path3();
  double rho_p = exact_dsg_bruteforce(p).density.value();
  REQUIRE(rho_p <= 1.0);
  CHECK(std::max(rho_p, 2.0) == 2.0);

  CHECK_THROWS_AS(rho_x_sensitivity_check(9, xs), std::invalid_argument);
}
