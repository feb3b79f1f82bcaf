#ifndef DSG_DENSITY_VALUE_HPP
#define DSG_DENSITY_VALUE_HPP

#include <cstdint>
#include <span>

#include "dsg/graph.hpp"
#include "dsg/privacy.hpp"
#include "dsg/rng.hpp"

namespace dsg {

enum class ValueMode { whp, expectation };

struct ValueEstimate {
  double estimate = 0.0;
  double clamp = 0.0;      // x
  double lap_scale = 0.0;  // 1 / ((2x-1) eps)
  PrivacyBudget budget;
};

// Laplace on the clamped density max(rho, x). The clamp keeps the global
// sensitivity at 1/(2x-1); x is floored at 0.51 so that bound stays positive
// for extreme eps.
ValueEstimate private_density_value(double rho_exact, int n, double eps,
                                    ValueMode mode, RngStream& stream);

// Convenience overload that computes the exact density with the flow oracle.
// Centralized by nature; refuses graphs beyond the oracle limit.
ValueEstimate private_density_value(const Graph& g, double eps, ValueMode mode,
                                    std::uint64_t seed,
                                    int oracle_limit = 5000);

struct SensitivityReport {
  int max_vertices = 0;
  long long pairs_checked = 0;
  double worst_slack = 1.0;  // min over pairs of bound - |difference|
  bool ok = false;
};

// Exhaustive check of |rho_x(G) - rho_x(G')| <= 1/(2x-1) over all graphs on
// up to n_max vertices and all single-edge neighbors.
SensitivityReport rho_x_sensitivity_check(int n_max,
                                          std::span<const double> xs);

}  // namespace dsg

#endif  // DSG_DENSITY_VALUE_HPP
