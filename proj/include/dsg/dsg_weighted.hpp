#ifndef DSG_DSG_WEIGHTED_HPP
#define DSG_DSG_WEIGHTED_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "dsg/dsg_private.hpp"
#include "dsg/graph.hpp"
#include "dsg/ledp.hpp"
#include "dsg/results.hpp"

namespace dsg {

// Geometric guess grid lambda_i = (1+beta)^i / (2 C_max), covering every
// possible optimum between 1/(2 C_max) and C_max * n.
struct LambdaGrid {
  double lambda0 = 0.0;
  double factor = 1.0;
  int count = 0;

  double lambda(int i) const;
  static LambdaGrid geometric(int n, double cmax, double beta);
  static LambdaGrid single(double lambda);
};

// Arithmetic grid of the centralized variant: spacing 4(n+tau)sqrt(log n/T).
struct ArithmeticGrid {
  double spacing = 0.0;
  long long count = 0;
};
ArithmeticGrid centralized_lambda_grid(int n, double cmax, long long horizon,
                                       double tau);

struct WeightedMwuRun {
  Ordering sigma;
  std::vector<double> x;  // p_v / c_v at the chosen round
  long long chosen_round = 0;
  std::vector<Ordering> all;
};

// Hedge-driven packing loop inside a running protocol. Orderings sort by
// p_v / c_v; each node publishes its count plus cost-scaled gaussian noise so
// the loss vector seen by Hedge has a uniform noise scale.
WeightedMwuRun weighted_mwu_rounds(Curator& curator,
                                   const std::vector<double>& costs,
                                   double lambda, long long horizon,
                                   double tau, std::uint64_t ns,
                                   std::uint64_t run_tag, bool keep_all);

// Standalone form used as a test oracle; identical noise streams.
WeightedMwuRun weighted_nop_mwu(const NodeWeightedGraph& g, double lambda,
                                long long horizon, double tau,
                                std::uint64_t seed, std::uint64_t ns = 0,
                                std::uint64_t run_tag = 0,
                                bool keep_all = false);

// Budget spent on x (must be 1) and the minimum of <x, q(sigma)> over all
// orderings, computed by the sorted characterization. x is feasible for the
// primal at level lambda iff budget_sum == 1 and min_cover >= lambda.
struct FeasibilityMargin {
  double budget_sum = 0.0;
  double min_cover = 0.0;
};
FeasibilityMargin plp_feasibility_margin(const NodeWeightedGraph& g,
                                         std::span<const double> x);

struct PeelRun;  // from dsg_private.hpp

PeelRun weighted_peeling(const NodeWeightedGraph& g, const Ordering& sigma,
                         double varsigma, std::uint64_t seed,
                         const RunOptions& opts = {});

struct WeightedRunOptions {
  RunOptions base;
  std::optional<LambdaGrid> grid_override;  // tests pin a single guess
};

// Fragment: the full grid-search pipeline inside an existing session.
struct WeightedPipelineOutcome {
  Candidate best;
  std::vector<Candidate> candidates;
  int grid_size = 0;
  int reps = 0;
};
WeightedPipelineOutcome weighted_dsg_ledp_rounds(
    Curator& curator, const std::vector<double>& costs, double cmax,
    long long horizon, double varsigma, double c, double beta,
    std::uint64_t ns, const WeightedRunOptions& opts);

LedpRun weighted_dsg_ledp(const NodeWeightedGraph& g, long long horizon,
                          double varsigma, double c, double beta,
                          std::uint64_t seed,
                          const WeightedRunOptions& opts = {});

// One random arithmetic-grid guess, one MWU run, one peeling.
LedpRun centralized_weighted_core(const NodeWeightedGraph& g,
                                  long long horizon, double varsigma,
                                  std::uint64_t seed,
                                  const RunOptions& opts = {},
                                  std::optional<long long> forced_k = {});

}  // namespace dsg

#endif  // DSG_DSG_WEIGHTED_HPP
