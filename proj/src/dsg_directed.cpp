#include "dsg/dsg_directed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dsg {

namespace {

struct LiftCosts {
  double alpha;
  double left;
  double right;
};

LiftCosts lift_costs(double t) {
  if (!(t > 0)) throw std::invalid_argument("lift: t must be positive");
  double alpha = std::min(1.0 / (2.0 * t), t / 2.0);
  return {alpha, 1.0 / (2.0 * t * alpha), t / (2.0 * alpha)};
}

// Splits a lifted vertex set into original (S, T) by side.
std::pair<VertexSet, VertexSet> split_sides(const VertexSet& members, int n) {
  VertexSet s, t;
  for (Vertex v : members) {
    if (v < n)
      s.push_back(v);
    else
      t.push_back(v - n);
  }
  return {std::move(s), std::move(t)};
}

}  // namespace

double lift_max_cost(double t) {
  auto c = lift_costs(t);
  return std::max(c.left, c.right);
}

double directed_t_value(int n, double beta, int i) {
  return std::pow(1.0 + beta, i) / std::sqrt(static_cast<double>(n));
}

BipartiteLift lift(const DirectedGraph& g, double t) {
  auto c = lift_costs(t);
  int n = g.vertex_count();
  std::vector<Edge> undirected;
  undirected.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) undirected.emplace_back(u, n + v);
  std::vector<double> costs(2 * n);
  for (int v = 0; v < n; ++v) {
    costs[v] = c.left;
    costs[n + v] = c.right;
  }
  BipartiteLift out;
  out.t = t;
  out.alpha = c.alpha;
  out.left_cost = c.left;
  out.right_cost = c.right;
  out.base_n = n;
  out.lifted =
      NodeWeightedGraph(Graph::from_edges(2 * n, undirected), std::move(costs));
  return out;
}

DirectedRun directed_dsg_ledp(const DirectedGraph& g, long long horizon,
                              double varsigma, double c, double beta,
                              std::uint64_t seed, const RunOptions& opts) {
  if (varsigma == 0 && !opts.zero_noise)
    throw std::invalid_argument(
        "noise scale 0 requires the zero-noise debug option");
  int n = g.vertex_count();
  int t_points = directed_t_grid_size(n, beta);
  double tau = std::sqrt(static_cast<double>(horizon)) * varsigma;

  ProtocolSession session(seed, {opts.record_transcript, opts.zero_noise});
  DirectedRun run;
  run.noise_hypothesis_met = opts.zero_noise || tau >= n;
  double best = -std::numeric_limits<double>::infinity();
  bool have_best = false;

  for (int i = 0; i < t_points; ++i) {
    double t_i = directed_t_value(n, beta, i);
    BipartiteLift lifted = lift(g, t_i);

    WeightedRunOptions wopts;
    wopts.base.zero_noise = opts.zero_noise;
    auto inner = session.run(
        lifted.lifted.graph().adjacency(), "t-grid", [&](Curator& curator) {
          curator.post("announce_t", {{"i", i}, {"t", t_i}});
          return weighted_dsg_ledp_rounds(
              curator, lifted.lifted.costs(), lifted.lifted.max_cost(),
              horizon, varsigma, c, beta,
              static_cast<std::uint64_t>(i) + 1, wopts);
        });

    auto [s_side, t_side] = split_sides(inner.best.set, n);
    // The cross-degree round runs (and is paid for) whether or not the split
    // is usable, so the ledger does not depend on the data.
    double rho_hat = session.run(
        g.out_adjacency(), "cross-degree", [&](Curator& curator) {
          curator.post("announce_split",
                       {{"i", i}, {"s", s_side}, {"t", t_side}});
          std::vector<char> member_t(n, 0);
          for (Vertex v : t_side) member_t[v] = 1;
          const std::uint64_t path[] = {stream_domain::kDegreeNoise,
                                        static_cast<std::uint64_t>(i)};
          auto outs = curator.collect(
              "cross_degree", s_side, NoiseSpec::gaussian(varsigma), 1.0,
              Cover::one_sided, path,
              [&](const NodeView& view, RngStream& s) {
                return view.degree_into(member_t) + s.gaussian(varsigma);
              });
          if (s_side.empty() || t_side.empty())
            return -std::numeric_limits<double>::infinity();
          double sum = 0.0;
          for (double d : outs) sum += d;
          return sum / std::sqrt(static_cast<double>(s_side.size()) *
                                 t_side.size());
        });

    DirectedCandidate candidate{std::move(s_side), std::move(t_side),
                                rho_hat};
    if (!have_best || rho_hat > best) {
      best = rho_hat;
      run.best = candidate;
      have_best = true;
    }
    if (opts.keep_candidates) run.candidates.push_back(std::move(candidate));
  }
  run.budget = session.budget();
  run.zero_noise = session.zero_noise_used();
  run.transcript = session.transcript();
  return run;
}

DirectedRun centralized_directed_core(const DirectedGraph& g,
                                      long long horizon, double varsigma,
                                      std::uint64_t seed,
                                      const RunOptions& opts,
                                      ForcedDirectedGuess forced) {
  if (varsigma == 0 && !opts.zero_noise)
    throw std::invalid_argument(
        "noise scale 0 requires the zero-noise debug option");
  int n = g.vertex_count();
  double tau = std::sqrt(static_cast<double>(horizon)) * varsigma;
  double spacing = 4.0 * (n + tau) *
                   std::sqrt(std::log(static_cast<double>(n)) /
                             static_cast<double>(horizon));
  long long count = std::max(
      1LL, static_cast<long long>(
               std::ceil(2.0 * n * n / spacing - 1e-9)));

  ProtocolSession session(seed, {opts.record_transcript, opts.zero_noise});
  DirectedRun run;
  run.noise_hypothesis_met = opts.zero_noise || tau >= n;

  RngStream pick_s = session.root().stream({stream_domain::kCurator, 0, 0, 2});
  RngStream pick_t = session.root().stream({stream_domain::kCurator, 0, 0, 3});
  RngStream pick_k = session.root().stream({stream_domain::kCurator, 0, 0, 4});
  int s_pick = forced.s_pick
                   ? *forced.s_pick
                   : static_cast<int>(pick_s.uniform_index(n)) + 1;
  int t_pick = forced.t_pick
                   ? *forced.t_pick
                   : static_cast<int>(pick_t.uniform_index(n)) + 1;
  long long k = forced.k ? *forced.k
                         : static_cast<long long>(pick_k.uniform_index(count)) +
                               1;
  double t = std::sqrt(static_cast<double>(s_pick) / t_pick);
  double lambda = static_cast<double>(k) * spacing;

  BipartiteLift lifted = lift(g, t);
  auto peel = session.run(
      lifted.lifted.graph().adjacency(), "centralized-directed",
      [&](Curator& curator) {
        curator.post("guess", {{"s_pick", s_pick},
                               {"t_pick", t_pick},
                               {"t", t},
                               {"k", k},
                               {"lambda", lambda}});
        auto mwu = weighted_mwu_rounds(curator, lifted.lifted.costs(), lambda,
                                       horizon, tau, 1, 0, false);
        return peel_rounds(curator, mwu.sigma, varsigma, 1, 0,
                           &lifted.lifted.costs());
      });

  auto [s_side, t_side] = split_sides(peel.prefix, n);
  bool valid = !s_side.empty() && !t_side.empty();
  double rho_hat = session.run(
      g.out_adjacency(), "directed-density", [&](Curator& curator) {
        double exact =
            valid ? directed_density(g, s_side, t_side) : 0.0;
        const std::uint64_t path[] = {stream_domain::kDegreeNoise, 0};
        double noisy = curator.central_mechanism(
            "directed_density", NoiseSpec::gaussian(varsigma), 1.0, path,
            exact);
        if (!valid) return -std::numeric_limits<double>::infinity();
        return noisy;
      });

  run.best = {std::move(s_side), std::move(t_side), rho_hat};
  run.candidates.push_back(run.best);
  run.budget = session.budget();
  run.zero_noise = session.zero_noise_used();
  run.transcript = session.transcript();
  return run;
}

double ledger_directed_dsg_ledp(int n, double c, double beta,
                                double varsigma) {
  int t_points = directed_t_grid_size(n, beta);
  double s2 = varsigma * varsigma;
  double total = 0.0;
  for (int i = 0; i < t_points; ++i) {
    double cmax = lift_max_cost(directed_t_value(n, beta, i));
    total += static_cast<double>(weighted_total_runs(2 * n, cmax, c, beta)) / s2;
    total += 0.5 / s2;  // cross-degree round
  }
  return total;
}

}  // namespace dsg
