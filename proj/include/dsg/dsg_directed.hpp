#ifndef DSG_DSG_DIRECTED_HPP
#define DSG_DSG_DIRECTED_HPP

#include <cstdint>
#include <optional>

#include "dsg/dsg_weighted.hpp"
#include "dsg/graph.hpp"
#include "dsg/results.hpp"

namespace dsg {

// Node-weighted bipartite view of a digraph at scale t: every directed edge
// (u, v) becomes the undirected edge {u_L, v_R}. Weights are rescaled by
// 1/alpha so the minimum cost is exactly 1.
struct BipartiteLift {
  double t = 1.0;
  double alpha = 0.5;        // min(1/(2t), t/2)
  double left_cost = 1.0;    // 1/(2 t alpha)
  double right_cost = 1.0;   // t/(2 alpha)
  int base_n = 0;
  NodeWeightedGraph lifted;  // 2n vertices; v_L = v, v_R = n + v
};

BipartiteLift lift(const DirectedGraph& g, double t);

// Max rescaled cost at scale t; shared with the ledger identity.
double lift_max_cost(double t);

// t-grid point i: (1+beta)^i / sqrt(n).
double directed_t_value(int n, double beta, int i);

struct DirectedCandidate {
  VertexSet s;
  VertexSet t;
  double noisy_density = 0.0;
};

struct DirectedRun {
  DirectedCandidate best;
  std::vector<DirectedCandidate> candidates;
  PrivacyBudget budget;
  bool zero_noise = false;
  Transcript transcript;
  bool noise_hypothesis_met = true;
};

// Grid over t, the weighted pipeline on each lift, then noisy cross degrees
// to score the split candidates. Candidates with an empty side score -inf.
DirectedRun directed_dsg_ledp(const DirectedGraph& g, long long horizon,
                              double varsigma, double c, double beta,
                              std::uint64_t seed, const RunOptions& opts = {});

struct ForcedDirectedGuess {
  std::optional<int> s_pick;       // 1..n
  std::optional<int> t_pick;       // 1..n
  std::optional<long long> k;      // 1..N
};

// Random (t, lambda) guesses, one weighted MWU run plus peeling on the lift,
// and a noisy directed density for the split.
DirectedRun centralized_directed_core(const DirectedGraph& g,
                                      long long horizon, double varsigma,
                                      std::uint64_t seed,
                                      const RunOptions& opts = {},
                                      ForcedDirectedGuess forced = {});

// Exact ledger total of directed_dsg_ledp with these parameters.
double ledger_directed_dsg_ledp(int n, double c, double beta, double varsigma);

}  // namespace dsg

#endif  // DSG_DSG_DIRECTED_HPP
