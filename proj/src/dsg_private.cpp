#include "dsg/dsg_private.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dsg/dsg_weighted.hpp"
#include "dsg/generators.hpp"

namespace dsg {

namespace {

void check_scale(double varsigma, bool zero_noise_ok) {
  if (varsigma < 0) throw std::invalid_argument("noise scale must be >= 0");
  if (varsigma == 0 && !zero_noise_ok)
    throw std::invalid_argument(
        "noise scale 0 requires the zero-noise debug option");
}

}  // namespace

MwuConfig MwuConfig::make(int n, double lambda, long long horizon, double tau) {
  if (!(lambda > 0))
    throw std::invalid_argument("mwu: lambda must be positive");
  MwuConfig c;
  c.horizon = horizon;
  c.tau = tau;
  c.lambda = lambda;
  c.width = (n + tau) / lambda;
  c.nu = tau / (c.width * lambda);
  c.alpha_bound = 8.0 * c.width *
                  std::sqrt(std::log(static_cast<double>(n)) /
                            static_cast<double>(horizon));
  return c;
}

Horizon default_horizon(int n, double varsigma, long long cap) {
  double raw = std::ceil(static_cast<double>(n) * n / (varsigma * varsigma));
  if (raw > static_cast<double>(cap)) return {cap, true};
  return {std::max(1LL, static_cast<long long>(raw)), false};
}

PeelOutcome peel_rounds(Curator& curator, const Ordering& sigma,
                        double varsigma, std::uint64_t ns,
                        std::uint64_t run_tag,
                        const std::vector<double>* costs) {
  int n = curator.n();
  if (sigma.size() != n)
    throw std::invalid_argument("peeling: ordering does not cover the graph");
  curator.post("peel_ordering", {{"tag", run_tag}, {"perm", sigma.perm}});
  const std::uint64_t path[] = {stream_domain::kPeelNoise, ns, run_tag};
  auto qhat = curator.collect(
      "peel_noisy_count", curator.all_parties(), NoiseSpec::gaussian(varsigma),
      1.0, Cover::one_sided, path,
      [&](const NodeView& view, RngStream& s) {
        return view.preceding_count(sigma) + s.gaussian(varsigma);
      });

  double cum = 0.0;
  double denom = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  int best_len = 0;
  for (int k = 1; k <= n; ++k) {
    Vertex v = sigma.perm[k - 1];
    cum += qhat[v];
    denom += costs ? (*costs)[v] : 1.0;
    double rho = cum / denom;
    if (rho > best) {
      best = rho;
      best_len = k;
    }
  }
  curator.post("peel_selected",
               {{"tag", run_tag}, {"prefix", best_len}, {"rho_hat", best}});
  PeelOutcome out;
  out.prefix.assign(sigma.perm.begin(), sigma.perm.begin() + best_len);
  std::sort(out.prefix.begin(), out.prefix.end());
  out.noisy_density = best;
  return out;
}

PeelRun peeling(const Graph& g, const Ordering& sigma, double varsigma,
                std::uint64_t seed, const RunOptions& opts) {
  check_scale(varsigma, opts.zero_noise);
  ProtocolSession session(seed, {opts.record_transcript, opts.zero_noise});
  auto outcome =
      session.run(g.adjacency(), "peeling", [&](Curator& curator) {
        return peel_rounds(curator, sigma, varsigma, 0, 0, nullptr);
      });
  PeelRun run;
  run.result = {std::move(outcome.prefix), outcome.noisy_density,
                session.budget(), session.zero_noise_used()};
  run.transcript = session.transcript();
  return run;
}

CoreOutcome dsg_ledp_core_rounds(Curator& curator, long long horizon,
                                 double tau, std::uint64_t ns,
                                 std::uint64_t run_tag, bool keep_all) {
  if (horizon < 1) throw std::invalid_argument("core: horizon must be >= 1");
  int n = curator.n();
  auto parties = curator.all_parties();
  std::vector<double> loads(n, 0.0);
  long long chosen = static_cast<long long>(
      curator.stream({ns, run_tag, 0}).uniform_index(horizon));
  CoreOutcome out;
  out.chosen_round = chosen;
  std::uint64_t path[] = {stream_domain::kCoreNoise, ns, run_tag, 0};
  for (long long t = 0; t < horizon; ++t) {
    Ordering pi = order_by_descending(loads);
    curator.post("core_ordering",
                 {{"tag", run_tag}, {"round", t + 1}, {"perm", pi.perm}});
    path[3] = static_cast<std::uint64_t>(t + 1);
    auto qhat = curator.collect(
        "core_noisy_count", parties, NoiseSpec::gaussian(tau), 1.0,
        Cover::one_sided, path, [&](const NodeView& view, RngStream& s) {
          return view.preceding_count(pi) + s.gaussian(tau);
        });
    for (int v = 0; v < n; ++v) loads[v] += qhat[v];
    if (t == chosen) out.chosen = pi;
    if (keep_all) out.all.push_back(std::move(pi));
  }
  curator.post("chosen_round", {{"tag", run_tag}, {"round", chosen + 1}});
  return out;
}

CoreRun dsg_ledp_core(const Graph& g, long long horizon, double tau,
                      std::uint64_t seed, const RunOptions& opts,
                      bool keep_all) {
  check_scale(tau, opts.zero_noise);
  ProtocolSession session(seed, {opts.record_transcript, opts.zero_noise});
  CoreRun run;
  run.outcome = session.run(g.adjacency(), "core", [&](Curator& curator) {
    return dsg_ledp_core_rounds(curator, horizon, tau, 0, 0, keep_all);
  });
  run.budget = session.budget();
  run.transcript = session.transcript();
  return run;
}

LedpRun dsg_ledp(const Graph& g, long long horizon, double varsigma, double c,
                 std::uint64_t seed, const RunOptions& opts) {
  check_scale(varsigma, opts.zero_noise);
  if (horizon < 1) throw std::invalid_argument("dsg_ledp: horizon must be >= 1");
  int n = g.vertex_count();
  int reps = opts.reps_override > 0 ? opts.reps_override
                                    : log2_repetitions(n, c);
  double tau = std::sqrt(static_cast<double>(horizon)) * varsigma;

  ProtocolSession session(seed, {opts.record_transcript, opts.zero_noise});
  LedpRun run;
  run.noise_hypothesis_met = opts.zero_noise || tau >= n;
  VertexSet best_set;
  double best_rho = -std::numeric_limits<double>::infinity();
  session.run(g.adjacency(), "dsg-ledp", [&](Curator& curator) {
    int best_rep = -1;
    for (int j = 0; j < reps; ++j) {
      auto core = dsg_ledp_core_rounds(curator, horizon, tau, 0, j, false);
      auto peel = peel_rounds(curator, core.chosen, varsigma, 0, j, nullptr);
      if (peel.noisy_density > best_rho) {
        best_rho = peel.noisy_density;
        best_set = peel.prefix;
        best_rep = j;
      }
      if (opts.keep_candidates)
        run.candidates.push_back(
            {std::move(peel.prefix), peel.noisy_density});
    }
    curator.post("selected", {{"rep", best_rep}, {"rho_hat", best_rho}});
    return 0;
  });
  run.best = {std::move(best_set), best_rho, session.budget(),
              session.zero_noise_used()};
  run.transcript = session.transcript();
  return run;
}

LedpRun centralized_dsg_core(const Graph& g, long long horizon,
                             double varsigma, std::uint64_t seed,
                             const RunOptions& opts) {
  RunOptions single = opts;
  single.reps_override = 1;
  return dsg_ledp(g, horizon, varsigma, 1.0, seed, single);
}

MwuOracleRun nop_mwu(const Graph& g, double lambda_star, long long horizon,
                     double tau, std::uint64_t seed, std::uint64_t ns,
                     std::uint64_t run_tag, bool keep_all) {
  NodeWeightedGraph unit(g, unit_costs(g.vertex_count()));
  auto run = weighted_nop_mwu(unit, lambda_star, horizon, tau, seed, ns,
                              run_tag, keep_all);
  MwuOracleRun out;
  out.distribution = std::move(run.x);  // unit costs: x == p
  out.sigma = std::move(run.sigma);
  out.chosen_round = run.chosen_round;
  out.all = std::move(run.all);
  return out;
}

double ps_select_eps(double per_copy_zcdp, double gamma, double delta) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("ps_select_eps: gamma must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("ps_select_eps: delta must lie in (0, 1)");
  return 6.0 * std::sqrt(per_copy_zcdp * std::log(1.0 / (gamma * delta)));
}

}  // namespace dsg
