#ifndef DSG_DSG_PRIVATE_HPP
#define DSG_DSG_PRIVATE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "dsg/graph.hpp"
#include "dsg/ledp.hpp"
#include "dsg/results.hpp"

namespace dsg {

// Width/noise bookkeeping for the packing-MWU loop.
struct MwuConfig {
  long long horizon = 0;       // T
  double tau = 0.0;            // per-count gaussian scale
  double lambda = 0.0;         // optimal density (or a guess)
  double width = 0.0;          // (n + tau) / lambda
  double nu = 0.0;             // loss-space noise, tau / (width * lambda)
  double alpha_bound = 0.0;    // 8 * width * sqrt(log n / T)

  static MwuConfig make(int n, double lambda, long long horizon, double tau);
};

// Default iteration count ceil(n^2 / varsigma^2), capped for desk-scale runs.
struct Horizon {
  long long rounds;
  bool capped;
};
Horizon default_horizon(int n, double varsigma, long long cap = 10'000'000);

struct PeelOutcome {
  VertexSet prefix;
  double noisy_density = 0.0;
};

// One peeling pass inside a running protocol. costs == nullptr gives the
// unweighted denominator |S|; otherwise c(S).
PeelOutcome peel_rounds(Curator& curator, const Ordering& sigma,
                        double varsigma, std::uint64_t ns, std::uint64_t run_tag,
                        const std::vector<double>* costs);

// Standalone peeling protocol (one round, budget 1/(2 varsigma^2)).
struct PeelRun {
  DensityResult result;
  Transcript transcript;
};
PeelRun peeling(const Graph& g, const Ordering& sigma, double varsigma,
                std::uint64_t seed, const RunOptions& opts = {});

struct CoreOutcome {
  Ordering chosen;
  long long chosen_round = 0;         // 0-based
  std::vector<Ordering> all;          // filled when keep_all
};

// The load-driven ordering protocol: T rounds of (order by loads, collect
// noisy counts, accumulate), returning the ordering of a uniformly chosen
// round.
CoreOutcome dsg_ledp_core_rounds(Curator& curator, long long horizon,
                                 double tau, std::uint64_t ns,
                                 std::uint64_t run_tag, bool keep_all);

struct CoreRun {
  CoreOutcome outcome;
  PrivacyBudget budget;
  Transcript transcript;
};
CoreRun dsg_ledp_core(const Graph& g, long long horizon, double tau,
                      std::uint64_t seed, const RunOptions& opts = {},
                      bool keep_all = false);

// Full local pipeline: ceil(c log2 n) core runs each followed by peeling;
// returns the candidate with the largest noisy density.
LedpRun dsg_ledp(const Graph& g, long long horizon, double varsigma, double c,
                 std::uint64_t seed, const RunOptions& opts = {});

// One core run plus one peeling; the repeatable building block for the
// centralized selection wrapper.
LedpRun centralized_dsg_core(const Graph& g, long long horizon,
                             double varsigma, std::uint64_t seed,
                             const RunOptions& opts = {});

// Test oracle for the MWU formulation: needs the optimal density, excluded
// from the CLI surface. Shares noise streams with dsg_ledp_core so the two
// can be compared round by round.
struct MwuOracleRun {
  std::vector<double> distribution;  // p at the chosen round
  Ordering sigma;
  long long chosen_round = 0;
  std::vector<Ordering> all;
};
MwuOracleRun nop_mwu(const Graph& g, double lambda_star, long long horizon,
                     double tau, std::uint64_t seed, std::uint64_t ns = 0,
                     std::uint64_t run_tag = 0, bool keep_all = false);

// Repetition wrapper: run a geometric number of copies of a private
// mechanism, keep the best by noisy quality.
template <typename R>
struct PsSelectRun {
  R best;
  int copies = 0;
};

template <typename R, typename Quality>
PsSelectRun<R> ps_select(const std::function<R(int)>& mechanism, double gamma,
                         RngStream j_stream, Quality quality) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("ps_select: gamma must lie in (0, 1)");
  double u = j_stream.uniform();
  int copies = 1 + static_cast<int>(std::floor(std::log(u) / std::log1p(-gamma)));
  PsSelectRun<R> out;
  out.copies = copies;
  for (int i = 0; i < copies; ++i) {
    R candidate = mechanism(i);
    if (i == 0 || quality(candidate) > quality(out.best))
      out.best = std::move(candidate);
  }
  return out;
}

// (eps, delta) guarantee of the wrapper around a rho-zCDP mechanism.
double ps_select_eps(double per_copy_zcdp, double gamma, double delta);

}  // namespace dsg

#endif  // DSG_DSG_PRIVATE_HPP
