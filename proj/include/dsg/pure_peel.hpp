#ifndef DSG_PURE_PEEL_HPP
#define DSG_PURE_PEEL_HPP

#include <cstdint>
#include <vector>

#include "dsg/graph.hpp"
#include "dsg/results.hpp"

namespace dsg {

struct PureRound {
  int survivors = 0;        // |S_i| entering the round
  int removed = 0;          // |L_i|
  double rho_hat = 0.0;     // noisy density estimate of S_i
  double threshold = 0.0;
  VertexSet set;            // S_i itself
};

struct PureRun {
  DensityResult best;
  int rounds = 0;
  std::vector<PureRound> log;
  Transcript transcript;
};

// Threshold-based batch peeling with geometric degree noise. Each round
// removes every survivor whose clamped noisy degree falls at or below
// (1+eta) times the clamped noisy average; the clamp at zero is what makes
// the averaging argument for the round bound hold for every noise draw.
// Density estimates use the raw (unclamped) values and stay unbiased.
PureRun simple_pure_ledp(const Graph& g, double eps_per_round, double eta,
                         std::uint64_t seed, const RunOptions& opts = {});

// eps * eta / log(n): the per-round parameter that meets a total-eps target.
double pure_eps_per_round(double total_eps, double eta, int n);

}  // namespace dsg

#endif  // DSG_PURE_PEEL_HPP
