#include "dsg/dsg_weighted.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "dsg/hedge.hpp"

namespace dsg {

namespace {

using CountsFn =
    std::function<std::vector<double>(long long, const Ordering&)>;

// Packing-LP loop: Hedge over nodes, the sorted-order oracle, losses built
// from noisy counts. Both the protocol path and the standalone test oracle
// drive this same loop, differing only in where the counts come from.
WeightedMwuRun mwu_engine(int n, const std::vector<double>& costs,
                          double lambda, long long horizon, double tau,
                          bool keep_all, RngStream pick,
                          const CountsFn& counts) {
  if (!(lambda > 0))
    throw std::invalid_argument("mwu: lambda guess must be positive");
  if (horizon < 1) throw std::invalid_argument("mwu: horizon must be >= 1");
  double width = (n + tau) / lambda;
  double inv_width = 1.0 / width;
  Hedge hedge(n, horizon);
  std::vector<double> log_costs(n);
  for (int v = 0; v < n; ++v) log_costs[v] = std::log(costs[v]);

  long long chosen = static_cast<long long>(pick.uniform_index(horizon));
  WeightedMwuRun run;
  run.chosen_round = chosen;

  std::vector<double> keys(n), losses(n);
  for (long long t = 0; t < horizon; ++t) {
    const auto& lw = hedge.log_weights();
    // p_v / c_v compared in log domain keeps the order exact.
    for (int v = 0; v < n; ++v) keys[v] = lw[v] - log_costs[v];
    Ordering sigma = order_by_descending(keys);
    auto qhat = counts(t, sigma);
    if (t == chosen) {
      auto p = hedge.distribution();
      run.x.resize(n);
      for (int v = 0; v < n; ++v) run.x[v] = p[v] / costs[v];
      run.sigma = sigma;
    }
    for (int v = 0; v < n; ++v)
      losses[v] = inv_width * (1.0 - qhat[v] / (costs[v] * lambda));
    hedge.update(losses);
    if (keep_all) run.all.push_back(std::move(sigma));
  }
  return run;
}

}  // namespace

double LambdaGrid::lambda(int i) const {
  return lambda0 * std::pow(factor, i);
}

LambdaGrid LambdaGrid::geometric(int n, double cmax, double beta) {
  if (!(beta > 0)) throw std::invalid_argument("grid: beta must be positive");
  LambdaGrid g;
  g.lambda0 = 1.0 / (2.0 * cmax);
  g.factor = 1.0 + beta;
  g.count = weighted_grid_size(n, cmax, beta);
  return g;
}

LambdaGrid LambdaGrid::single(double lambda) {
  return {lambda, 1.0, 1};
}

ArithmeticGrid centralized_lambda_grid(int n, double cmax, long long horizon,
                                       double tau) {
  ArithmeticGrid g;
  g.spacing = 4.0 * (n + tau) *
              std::sqrt(std::log(static_cast<double>(n)) /
                        static_cast<double>(horizon));
  g.count = static_cast<long long>(
      std::ceil(2.0 * cmax * n / g.spacing - 1e-9));
  g.count = std::max(g.count, 1LL);
  return g;
}

WeightedMwuRun weighted_mwu_rounds(Curator& curator,
                                   const std::vector<double>& costs,
                                   double lambda, long long horizon,
                                   double tau, std::uint64_t ns,
                                   std::uint64_t run_tag, bool keep_all) {
  auto parties = curator.all_parties();
  std::uint64_t path[] = {stream_domain::kCoreNoise, ns, run_tag, 0};
  CountsFn counts = [&](long long t, const Ordering& sigma) {
    curator.post("mwu_ordering",
                 {{"tag", run_tag}, {"round", t + 1}, {"perm", sigma.perm}});
    path[3] = static_cast<std::uint64_t>(t + 1);
    return curator.collect(
        "mwu_noisy_count", parties, NoiseSpec::gaussian(tau), 1.0,
        Cover::one_sided, path, [&](const NodeView& view, RngStream& s) {
          return view.preceding_count(sigma) +
                 costs[view.id()] * s.gaussian(tau);
        });
  };
  return mwu_engine(curator.n(), costs, lambda, horizon, tau, keep_all,
                    curator.stream({ns, run_tag, 0}), counts);
}

WeightedMwuRun weighted_nop_mwu(const NodeWeightedGraph& g, double lambda,
                                long long horizon, double tau,
                                std::uint64_t seed, std::uint64_t ns,
                                std::uint64_t run_tag, bool keep_all) {
  RngRoot root(seed);
  int n = g.vertex_count();
  CountsFn counts = [&](long long t, const Ordering& sigma) {
    auto q = peel_counts(g.graph(), sigma);
    std::vector<double> qhat(n);
    for (int v = 0; v < n; ++v) {
      RngStream s = root.stream({stream_domain::kCoreNoise, ns, run_tag,
                                 static_cast<std::uint64_t>(t + 1),
                                 static_cast<std::uint64_t>(v)});
      qhat[v] = q[v] + g.cost(v) * s.gaussian(tau);
    }
    return qhat;
  };
  RngStream pick = root.stream({stream_domain::kCurator, ns, run_tag, 0});
  return mwu_engine(n, g.costs(), lambda, horizon, tau, keep_all, pick,
                    counts);
}

FeasibilityMargin plp_feasibility_margin(const NodeWeightedGraph& g,
                                         std::span<const double> x) {
  int n = g.vertex_count();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("feasibility: x has wrong size");
  for (double xi : x) {
    if (xi < 0)
      throw std::invalid_argument("feasibility: negative entries in x");
  }
  FeasibilityMargin m;
  for (int v = 0; v < n; ++v) m.budget_sum += g.cost(v) * x[v];
  Ordering sigma = order_by_descending(x);
  auto q = peel_counts(g.graph(), sigma);
  for (int v = 0; v < n; ++v) m.min_cover += x[v] * q[v];
  return m;
}

PeelRun weighted_peeling(const NodeWeightedGraph& g, const Ordering& sigma,
                         double varsigma, std::uint64_t seed,
                         const RunOptions& opts) {
  if (varsigma == 0 && !opts.zero_noise)
    throw std::invalid_argument(
        "noise scale 0 requires the zero-noise debug option");
  ProtocolSession session(seed, {opts.record_transcript, opts.zero_noise});
  auto outcome = session.run(
      g.graph().adjacency(), "weighted-peeling", [&](Curator& curator) {
        return peel_rounds(curator, sigma, varsigma, 0, 0, &g.costs());
      });
  PeelRun run;
  run.result = {std::move(outcome.prefix), outcome.noisy_density,
                session.budget(), session.zero_noise_used()};
  run.transcript = session.transcript();
  return run;
}

WeightedPipelineOutcome weighted_dsg_ledp_rounds(
    Curator& curator, const std::vector<double>& costs, double cmax,
    long long horizon, double varsigma, double c, double beta,
    std::uint64_t ns, const WeightedRunOptions& opts) {
  int n = curator.n();
  LambdaGrid grid = opts.grid_override ? *opts.grid_override
                                       : LambdaGrid::geometric(n, cmax, beta);
  int reps = opts.base.reps_override > 0 ? opts.base.reps_override
                                         : log2_repetitions(n, c);
  double tau = std::sqrt(static_cast<double>(horizon)) * varsigma;

  WeightedPipelineOutcome out;
  out.grid_size = grid.count;
  out.reps = reps;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.count; ++i) {
    double lambda_i = grid.lambda(i);
    for (int j = 0; j < reps; ++j) {
      std::uint64_t tag = static_cast<std::uint64_t>(i) * reps + j;
      auto mwu = weighted_mwu_rounds(curator, costs, lambda_i, horizon, tau,
                                     ns, tag, false);
      auto peel = peel_rounds(curator, mwu.sigma, varsigma, ns, tag, &costs);
      if (peel.noisy_density > best) {
        best = peel.noisy_density;
        out.best = {peel.prefix, peel.noisy_density};
      }
      if (opts.base.keep_candidates)
        out.candidates.push_back({std::move(peel.prefix), peel.noisy_density});
    }
  }
  curator.post("selected", {{"rho_hat", best}});
  return out;
}

LedpRun weighted_dsg_ledp(const NodeWeightedGraph& g, long long horizon,
                          double varsigma, double c, double beta,
                          std::uint64_t seed,
                          const WeightedRunOptions& opts) {
  if (varsigma == 0 && !opts.base.zero_noise)
    throw std::invalid_argument(
        "noise scale 0 requires the zero-noise debug option");
  if (horizon < 1)
    throw std::invalid_argument("weighted_dsg_ledp: horizon must be >= 1");
  double tau = std::sqrt(static_cast<double>(horizon)) * varsigma;
  ProtocolSession session(seed,
                          {opts.base.record_transcript, opts.base.zero_noise});
  LedpRun run;
  run.noise_hypothesis_met =
      opts.base.zero_noise || tau >= g.vertex_count();
  auto outcome = session.run(
      g.graph().adjacency(), "weighted-dsg-ledp", [&](Curator& curator) {
        return weighted_dsg_ledp_rounds(curator, g.costs(), g.max_cost(),
                                        horizon, varsigma, c, beta, 0, opts);
      });
  run.best = {std::move(outcome.best.set), outcome.best.noisy_density,
              session.budget(), session.zero_noise_used()};
  run.candidates = std::move(outcome.candidates);
  run.transcript = session.transcript();
  return run;
}

LedpRun centralized_weighted_core(const NodeWeightedGraph& g,
                                  long long horizon, double varsigma,
                                  std::uint64_t seed, const RunOptions& opts,
                                  std::optional<long long> forced_k) {
  if (varsigma == 0 && !opts.zero_noise)
    throw std::invalid_argument(
        "noise scale 0 requires the zero-noise debug option");
  int n = g.vertex_count();
  double tau = std::sqrt(static_cast<double>(horizon)) * varsigma;
  ArithmeticGrid grid = centralized_lambda_grid(n, g.max_cost(), horizon, tau);

  ProtocolSession session(seed, {opts.record_transcript, opts.zero_noise});
  LedpRun run;
  run.noise_hypothesis_met = opts.zero_noise || tau >= n;
  auto outcome = session.run(
      g.graph().adjacency(), "centralized-weighted", [&](Curator& curator) {
        long long k = forced_k
                          ? *forced_k
                          : static_cast<long long>(
                                curator.stream({0, 0, 1}).uniform_index(
                                    grid.count)) +
                                1;
        double lambda = static_cast<double>(k) * grid.spacing;
        curator.post("lambda_guess",
                     {{"k", k}, {"count", grid.count}, {"lambda", lambda}});
        auto mwu =
            weighted_mwu_rounds(curator, g.costs(), lambda, horizon, tau, 0,
                                0, false);
        return peel_rounds(curator, mwu.sigma, varsigma, 0, 0, &g.costs());
      });
  run.best = {std::move(outcome.prefix), outcome.noisy_density,
              session.budget(), session.zero_noise_used()};
  if (opts.keep_candidates)
    run.candidates.push_back({run.best.members, run.best.noisy_density});
  run.transcript = session.transcript();
  return run;
}

}  // namespace dsg
