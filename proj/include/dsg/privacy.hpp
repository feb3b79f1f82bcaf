#ifndef DSG_PRIVACY_HPP
#define DSG_PRIVACY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace dsg {

// zCDP is the single internal accounting currency. The pure-eps component
// exists only for the geometric-noise peeling algorithm, which gives a pure
// eps-DP guarantee that would be wasteful to route through zCDP.
struct PrivacyBudget {
  double zcdp = 0.0;
  double pure_eps = 0.0;

  // (eps, delta) at the given delta: pure eps plus the converted zCDP part.
  double eps_at(double delta) const;
};

struct EpsDelta {
  double eps = 0.0;
  double delta = 0.0;
};

enum class NoiseKind { gaussian, geometric, laplace };

// scale semantics: standard deviation for gaussian, eps-per-unit-sensitivity
// for geometric, b for laplace. scale == 0 is the zero-noise debug mode and
// is rejected unless the caller explicitly enabled it.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::gaussian;
  double scale = 0.0;

  static NoiseSpec gaussian(double std) { return {NoiseKind::gaussian, std}; }
  static NoiseSpec geometric(double eps_unit) {
    return {NoiseKind::geometric, eps_unit};
  }
  static NoiseSpec laplace(double b) { return {NoiseKind::laplace, b}; }

  bool zero_noise() const { return scale == 0.0; }
};

// rho_z + 2*sqrt(rho_z * ln(1/delta)): the RDP route with the minimizing
// order alpha = 1 + sqrt(ln(1/delta)/rho_z) substituted. An explicit alpha
// overrides the minimizer.
double zcdp_to_eps(double zcdp, double delta,
                   std::optional<double> alpha = std::nullopt);

enum class SigmaVariant { ledp, centralized, weighted, directed, centralized_directed };

struct SigmaParams {
  double eps = 0.0;
  double delta = 0.0;
  int n = 0;
  double c = 1.0;
  double beta = 0.1;    // weighted/directed grids
  double cmax = 1.0;    // weighted
};

// The per-variant noise scale that meets an (eps, delta) target. Throws
// std::domain_error naming the violated hypothesis when eps is out of the
// admissible range for the variant.
double sigma_for_target(SigmaVariant variant, const SigmaParams& p);

enum class Disjointness { strict, two_cover };

PrivacyBudget compose_sequential(std::span<const PrivacyBudget> parts);
PrivacyBudget compose_parallel(std::span<const PrivacyBudget> parts,
                               Disjointness d);

// Loop-count helpers shared by the algorithms and the ledger identities.
// The accountant checks would silently drift if these were duplicated.
int log2_repetitions(int n, double c);                       // ceil(c*log2 n), >= 1
int weighted_grid_size(int n, double cmax, double beta);     // ceil(log_{1+b}(2*cmax*n)) + 1
long long weighted_total_runs(int n, double cmax, double c, double beta);
int directed_t_grid_size(int n, double beta);                // ceil(log_{1+b} n) + 1

// Exact ledger totals (in zCDP) for a run with noise scale varsigma.
double ledger_dsg_ledp(int n, double c, double varsigma);
double ledger_centralized_core(double varsigma);
double ledger_weighted_dsg_ledp(int n, double cmax, double c, double beta,
                                double varsigma);
double ledger_centralized_directed_core(double varsigma);
// Sums the exact per-t-iteration cost of the directed pipeline: the inner
// weighted run on the 2n-vertex lift with that iteration's max cost, plus
// one cross-degree round.
double ledger_directed_dsg_ledp(int n, double c, double beta, double varsigma);

enum class Cover { one_sided, two_sided };

struct LedgerEntry {
  std::string phase;
  int round = 0;
  std::string mechanism;
  double sensitivity = 0.0;
  double scale = 0.0;
  Cover cover = Cover::one_sided;
  double zcdp_cost = 0.0;
  double eps_cost = 0.0;
  bool post_processing = false;
};

class Accountant {
 public:
  // Cost of one collection round under parallel composition over the
  // declared cover, computed from the declared spec.
  static PrivacyBudget round_cost(const NoiseSpec& spec, double sensitivity,
                                  Cover cover);

  void add_round(const std::string& phase, int round, const NoiseSpec& spec,
                 double sensitivity, Cover cover);

  const std::vector<LedgerEntry>& entries() const { return entries_; }
  PrivacyBudget total() const { return total_; }

  nlohmann::json to_json(double delta) const;

 private:
  std::vector<LedgerEntry> entries_;
  PrivacyBudget total_;
};

}  // namespace dsg

#endif  // DSG_PRIVACY_HPP
