#include <cmath>
#include <limits>

#include "doctest.h"
#include "dsg/dsg_private.hpp"
#include "dsg/dsg_weighted.hpp"
#include "dsg/generators.hpp"
#include "dsg/oracles.hpp"
#include "test_util.hpp"

using namespace dsg;
using namespace dsg_test;

TEST_CASE("weighted peeling with unit costs matches unweighted bit for bit") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    int n = 5 + static_cast<int>(seed % 6);
    Graph g = random_graph(n, 0.5, seed + 11);
    NodeWeightedGraph unit(g, unit_costs(n));
    Ordering sigma = random_ordering(n, seed);
    auto uw = peeling(g, sigma, 1.5, seed);
    auto w = weighted_peeling(unit, sigma, 1.5, seed);
    CHECK(uw.result.members == w.result.members);
    CHECK(uw.result.noisy_density == w.result.noisy_density);
  }
}

TEST_CASE("zero-noise weighted peeling on a weighted triangle") {
  NodeWeightedGraph g(triangle(), {1, 1, 2});
  RunOptions opts;
  opts.zero_noise = true;
  auto run = weighted_peeling(g, Ordering::identity(3), 0.0, 3, opts);
  // Prefix densities 0, 1/2, 3/4: the full set wins.
  CHECK(run.result.noisy_density == doctest::Approx(0.75));
  CHECK(run.result.members == VertexSet{0, 1, 2});
}

TEST_CASE("weighted peeling concentration with random costs") {
  auto planted = planted_dense(150, 25, 0.85, 0.02, 5);
  NodeWeightedGraph g(planted.graph, random_costs(150, 1.0, 3.0, 6));
  const double varsigma = 8.0;
  double slack = 2.0 * varsigma * std::sqrt(2.0 * std::log(150.0));
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Ordering sigma = random_ordering(150, 700 + trial);
    // Exact best weighted prefix as the reference point.
    auto q = peel_counts(g.graph(), sigma);
    double cum = 0, denom = 0, best = -1;
    int best_len = 1;
    for (int k = 1; k <= 150; ++k) {
      Vertex v = sigma.perm[k - 1];
      cum += q[v];
      denom += g.cost(v);
      if (cum / denom > best) {
        best = cum / denom;
        best_len = k;
      }
    }
    (void)best_len;
    auto run = weighted_peeling(g, sigma, varsigma, 800 + trial);
    if (weighted_density(g, run.result.members) >= best - slack) ++ok;
  }
  CHECK(ok >= 99);
}

TEST_CASE("weighted mwu oracle basics") {
  Graph g = random_graph(10, 0.5, 21);
  NodeWeightedGraph unit(g, unit_costs(10));

  // Unit costs and the true optimum reduce to the unweighted oracle.
  double lambda_star = exact_dsg_flow(g).value();
  auto weighted = weighted_nop_mwu(unit, lambda_star, 16, 2.0, 5, 0, 0, true);
  auto plain = nop_mwu(g, lambda_star, 16, 2.0, 5, 0, 0, true);
  REQUIRE(weighted.all.size() == plain.all.size());
  for (std::size_t t = 0; t < weighted.all.size(); ++t)
    CHECK(weighted.all[t].perm == plain.all[t].perm);
  CHECK(weighted.x == plain.distribution);

  // Horizon 1 with unit costs: the id order.
  auto first = weighted_nop_mwu(unit, 1.0, 1, 2.0, 9);
  CHECK(first.sigma.perm == Ordering::identity(10).perm);

  CHECK_THROWS_AS(weighted_nop_mwu(unit, -2.0, 4, 1.0, 1),
                  std::invalid_argument);
}

TEST_CASE("feasibility margin") {
  NodeWeightedGraph unit(triangle(), {1, 1, 1});
  std::vector<double> x(3, 1.0 / 3.0);
  auto m = plp_feasibility_margin(unit, x);
  CHECK(m.budget_sum == doctest::Approx(1.0));
  CHECK(m.min_cover == doctest::Approx(1.0));  // sum of min(x_u, x_v)

  std::vector<double> zero(3, 0.0);
  CHECK(plp_feasibility_margin(unit, zero).min_cover == doctest::Approx(0.0));

  std::vector<double> neg{0.5, -0.1, 0.6};
  CHECK_THROWS_AS(plp_feasibility_margin(unit, neg), std::invalid_argument);
}

TEST_CASE("sorted cover equals the brute-force minimum over orderings") {
  RngRoot root(31);
  auto s = root.stream({1});
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    int n = 5 + static_cast<int>(seed % 2);
    Graph g = random_graph(n, 0.5, seed + 300);
    NodeWeightedGraph w(g, random_costs(n, 1.0, 4.0, seed));
    auto perms = all_permutations(n);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<double> x(n);
      for (auto& xi : x) xi = s.uniform();
      auto m = plp_feasibility_margin(w, x);
      double brute = std::numeric_limits<double>::infinity();
      for (auto& perm : perms) {
        auto q = peel_counts(g, Ordering::from_perm(perm));
        double val = 0;
        for (int v = 0; v < n; ++v) val += x[v] * q[v];
        brute = std::min(brute, val);
      }
      CHECK(m.min_cover == doctest::Approx(brute).epsilon(1e-12));
      // And it equals the min-edge characterization.
      double edge_sum = 0;
      for (auto [u, v] : g.edges()) edge_sum += std::min(x[u], x[v]);
      CHECK(m.min_cover == doctest::Approx(edge_sum).epsilon(1e-12));
    }
  }
}

TEST_CASE("zero-noise feasibility of the returned primal point") {
  // With a guess just above the optimum, the returned x is feasible for the
  // relaxed primal at level lambda - 4L in at least 40 of 100 trials.
  Graph g = random_graph(8, 0.6, 44);
  NodeWeightedGraph w(g, random_costs(8, 1.0, 2.0, 9));
  double lambda_star = exact_weighted_bruteforce(w).density;
  REQUIRE(lambda_star > 0);
  const long long T = 100000;
  const double tau = 0.0;
  double L = 4.0 * (8 + tau) * std::sqrt(std::log(8.0) / T);
  double lambda = lambda_star + 0.5 * L;
  int feasible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto run = weighted_nop_mwu(w, lambda, T, tau, 100 + trial);
    auto m = plp_feasibility_margin(w, run.x);
    if (std::fabs(m.budget_sum - 1.0) < 1e-9 &&
        m.min_cover >= lambda - 4.0 * L - 1e-9) {
      ++feasible;
    }
  }
  CHECK(feasible >= 40);
}

TEST_CASE("rounding a feasible point yields a dense threshold set") {
  // Whenever the margin check passes at level lambda, scanning the n
  // thresholds of x produces a set of weighted density >= lambda.
  Graph g = random_graph(8, 0.6, 44);
  NodeWeightedGraph w(g, random_costs(8, 1.0, 2.0, 9));
  double lambda_star = exact_weighted_bruteforce(w).density;
  const long long T = 100000;
  double L = 4.0 * 8 * std::sqrt(std::log(8.0) / T);
  double lambda = lambda_star + 0.5 * L;
  int rounded = 0, feasible = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto run = weighted_nop_mwu(w, lambda, T, 0.0, 100 + trial);
    auto m = plp_feasibility_margin(w, run.x);
    if (std::fabs(m.budget_sum - 1.0) > 1e-9) continue;
    double level = m.min_cover;
    ++feasible;
    Ordering sorted = order_by_descending(run.x);
    for (int len = 1; len <= 8; ++len) {
      VertexSet prefix(sorted.perm.begin(), sorted.perm.begin() + len);
      std::sort(prefix.begin(), prefix.end());
      if (weighted_density(w, prefix) >= level - 1e-9) {
        ++rounded;
        break;
      }
    }
  }
  CHECK(feasible > 0);
  CHECK(rounded == feasible);
}

TEST_CASE("lp exactness at small scale") {
  // Optimal subsets, the x they induce, and threshold rounding all agree.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    int n = 4 + static_cast<int>(seed % 3);
    Graph g = random_graph(n, 0.55, seed + 60);
    NodeWeightedGraph w(g, random_costs(n, 1.0, 3.0, seed + 1));
    auto opt = exact_weighted_bruteforce(w);
    if (opt.density <= 0) continue;
    std::vector<double> x(n, 0.0);
    double cost = w.total_cost(opt.set);
    for (Vertex v : opt.set) x[v] = 1.0 / cost;
    auto m = plp_feasibility_margin(w, x);
    CHECK(m.budget_sum == doctest::Approx(1.0));
    CHECK(m.min_cover == doctest::Approx(opt.density).epsilon(1e-12));
  }
}

TEST_CASE("zero-noise weighted pipeline on the bridge graph") {
  NodeWeightedGraph unit(two_triangle_bridge(), unit_costs(6));
  WeightedRunOptions opts;
  opts.base.zero_noise = true;
  const double beta = 0.1;
  auto run = weighted_dsg_ledp(unit, 4096, 0.0, 1.0, beta, 99, opts);
  double lambda_star = 7.0 / 6.0;
  CHECK(weighted_density(unit, run.best.members) >=
        (1.0 - 4.0 * beta) * lambda_star - 1e-12);
}

TEST_CASE("weighted pipeline ledger identity") {
  Graph g = random_graph(16, 0.4, 71);
  NodeWeightedGraph w(g, random_costs(16, 1.0, 4.0, 72));
  const double varsigma = 3.0;
  const double beta = 0.2;
  auto run = weighted_dsg_ledp(w, 9, varsigma, 1.0, beta, 5);
  double expected =
      ledger_weighted_dsg_ledp(16, w.max_cost(), 1.0, beta, varsigma);
  CHECK(run.best.budget.zcdp == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected ==
        doctest::Approx(static_cast<double>(
                            weighted_total_runs(16, w.max_cost(), 1.0, beta)) /
                        (varsigma * varsigma))
            .epsilon(1e-12));
}

TEST_CASE("unit-weight pipeline reduction, bit for bit") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    int n = 8 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 0.45, seed + 90);
    NodeWeightedGraph unit(g, unit_costs(n));
    const double varsigma = 2.0;
    const long long T = 12;
    const double beta = 0.3;

    WeightedRunOptions wopts;
    wopts.base.keep_candidates = true;
    auto wrun = weighted_dsg_ledp(unit, T, varsigma, 1.0, beta, seed, wopts);

    int grid = weighted_grid_size(n, 1.0, beta);
    int reps = log2_repetitions(n, 1.0);
    RunOptions uopts;
    uopts.keep_candidates = true;
    uopts.reps_override = grid * reps;
    auto urun = dsg_ledp(g, T, varsigma, 1.0, seed, uopts);

    REQUIRE(wrun.candidates.size() == urun.candidates.size());
    for (std::size_t i = 0; i < wrun.candidates.size(); ++i) {
      CHECK(wrun.candidates[i].set == urun.candidates[i].set);
      CHECK(wrun.candidates[i].noisy_density ==
            urun.candidates[i].noisy_density);
    }
    CHECK(wrun.best.members == urun.best.members);
    CHECK(wrun.best.noisy_density == urun.best.noisy_density);
  }
}

TEST_CASE("centralized weighted grid: regression value") {
  // n = 100, T = 1e4, unit costs, varsigma = 10 so tau = 1000.
  ArithmeticGrid grid = centralized_lambda_grid(100, 1.0, 10000, 1000.0);
  double spacing = 4.0 * 1100.0 * std::sqrt(std::log(100.0) / 10000.0);
  CHECK(grid.spacing == doctest::Approx(spacing).epsilon(1e-12));
  CHECK(grid.count ==
        static_cast<long long>(std::ceil(200.0 / spacing - 1e-9)));
  CHECK(grid.count == 3);
}

TEST_CASE("centralized weighted core: ledger and forced guess") {
  Graph g = random_graph(12, 0.5, 33);
  NodeWeightedGraph w(g, random_costs(12, 1.0, 2.0, 34));
  const double varsigma = 2.5;
  auto run = centralized_weighted_core(w, 16, varsigma, 6);
  CHECK(run.best.budget.zcdp ==
        doctest::Approx(ledger_centralized_core(varsigma)).epsilon(1e-12));

  // Forcing the guess makes the core equal a direct mwu + peeling at that
  // lambda under zero noise.
  RunOptions zopts;
  zopts.zero_noise = true;
  const long long T = 512;
  auto grid = centralized_lambda_grid(12, w.max_cost(), T, 0.0);
  long long k = std::max(1LL, grid.count / 2);
  auto forced = centralized_weighted_core(w, T, 0.0, 6, zopts, k);
  auto mwu = weighted_nop_mwu(w, k * grid.spacing, T, 0.0, 6, 0, 0);
  RunOptions peel_opts;
  peel_opts.zero_noise = true;
  auto ref = weighted_peeling(w, mwu.sigma, 0.0, 6, peel_opts);
  CHECK(forced.best.members == ref.result.members);
  CHECK(forced.best.noisy_density == ref.result.noisy_density);
}

TEST_CASE("wrapped centralized weighted pipeline on a planted instance") {
  auto planted = planted_dense(100, 20, 0.9, 0.02, 55);
  NodeWeightedGraph unit(planted.graph, unit_costs(100));
  double block = weighted_density(unit, planted.planted);

  SigmaParams sp;
  sp.eps = 4.0;
  sp.delta = 1e-6;
  sp.n = 100;
  double varsigma = sigma_for_target(SigmaVariant::centralized, sp);
  long long T = default_horizon(100, varsigma).rounds;
  double bound = block - 10.0 *
                             std::sqrt(std::log(100.0) *
                                       std::log(100.0 / sp.delta)) /
                             sp.eps;

  RngRoot root(1234);
  int hits = 0;
  const int trials = 20;
  for (int trial = 0; trial < trials; ++trial) {
    std::function<LedpRun(int)> mech = [&](int copy) {
      const std::uint64_t path[] = {stream_domain::kSelect,
                                    static_cast<std::uint64_t>(trial),
                                    static_cast<std::uint64_t>(copy + 1)};
      return centralized_weighted_core(unit, T, varsigma,
                                       root.derive_key(path));
    };
    auto sel = ps_select<LedpRun>(
        mech, 0.01,
        root.stream({stream_domain::kSelect,
                     static_cast<std::uint64_t>(trial), 0}),
        [](const LedpRun& r) { return r.best.noisy_density; });
    if (weighted_density(unit, sel.best.best.members) >= bound) ++hits;
  }
  CHECK(hits >= 17);  // >= 85% at the acceptance scale
}
