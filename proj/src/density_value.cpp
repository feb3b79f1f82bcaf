#include "dsg/density_value.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dsg/oracles.hpp"

namespace dsg {

namespace {

double clamp_level(int n, double eps, ValueMode mode) {
  double x = mode == ValueMode::whp
                 ? std::sqrt(std::log(static_cast<double>(n)) / eps)
                 : std::sqrt(1.0 / eps);
  return std::max(x, 0.51);
}

}  // namespace

ValueEstimate private_density_value(double rho_exact, int n, double eps,
                                    ValueMode mode, RngStream& stream) {
  if (!(eps > 0)) throw std::invalid_argument("density value: eps must be > 0");
  if (n < 1) throw std::invalid_argument("density value: empty graph");
  ValueEstimate out;
  out.clamp = clamp_level(n, eps, mode);
  out.lap_scale = 1.0 / ((2.0 * out.clamp - 1.0) * eps);
  out.estimate = std::max(rho_exact, out.clamp) + stream.laplace(out.lap_scale);
  out.budget.pure_eps = eps;
  return out;
}

ValueEstimate private_density_value(const Graph& g, double eps, ValueMode mode,
                                    std::uint64_t seed, int oracle_limit) {
  if (g.vertex_count() > oracle_limit)
    throw std::invalid_argument(
        "density value: graph exceeds the exact oracle limit; supply the "
        "exact density directly");
  double rho = exact_dsg_flow(g).value();
  RngRoot root(seed);
  RngStream stream = root.stream({stream_domain::kValueNoise});
  return private_density_value(rho, g.vertex_count(), eps, mode, stream);
}

SensitivityReport rho_x_sensitivity_check(int n_max,
                                          std::span<const double> xs) {
  if (n_max < 2 || n_max > 6)
    throw std::invalid_argument("sensitivity check: n_max must be in [2, 6]");
  SensitivityReport report;
  report.max_vertices = n_max;
  report.worst_slack = std::numeric_limits<double>::infinity();

  for (int n = 2; n <= n_max; ++n) {
    int slots = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    // Exact max density for every edge mask on n vertices.
    std::vector<double> rho(1u << slots);
    std::vector<std::uint32_t> adj(n);
    for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
      std::fill(adj.begin(), adj.end(), 0u);
      for (int e = 0; e < slots; ++e) {
        if (mask & (1u << e)) {
          adj[pairs[e].first] |= 1u << pairs[e].second;
          adj[pairs[e].second] |= 1u << pairs[e].first;
        }
      }
      double best = 0.0;
      for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int twice = 0;
        for (std::uint32_t rest = s; rest;) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          twice += std::popcount(adj[v] & s);
        }
        best = std::max(best, static_cast<double>(twice / 2) /
                                  std::popcount(s));
      }
      rho[mask] = best;
    }
    for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
      for (int e = 0; e < slots; ++e) {
        if (mask & (1u << e)) continue;  // count each neighbor pair once
        std::uint32_t other = mask | (1u << e);
        ++report.pairs_checked;
        for (double x : xs) {
          double bound = 1.0 / (2.0 * x - 1.0);
          double diff = std::fabs(std::max(rho[mask], x) -
                                  std::max(rho[other], x));
          report.worst_slack = std::min(report.worst_slack, bound - diff);
        }
      }
    }
  }
  report.ok = report.worst_slack >= -1e-12;
  return report;
}

}  // namespace dsg
