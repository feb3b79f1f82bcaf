#include "dsg/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsg {

namespace {

// ceil with a small backlash so that values that are integers up to fp noise
// (log2 of a power of two, say) do not get bumped a whole step.
int ceil_count(double x) {
  return static_cast<int>(std::ceil(x - 1e-9));
}

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("delta must lie in (0, 1)");
}

}  // namespace

double PrivacyBudget::eps_at(double delta) const {
  double eps = pure_eps;
  if (zcdp > 0.0) eps += zcdp_to_eps(zcdp, delta);
  return eps;
}

double zcdp_to_eps(double zcdp, double delta, std::optional<double> alpha) {
  check_delta(delta);
  if (zcdp < 0.0) throw std::domain_error("zCDP budget must be nonnegative");
  if (zcdp == 0.0) return 0.0;
  double l = std::log(1.0 / delta);
  if (alpha) {
    if (!(*alpha > 1.0)) throw std::domain_error("alpha must exceed 1");
    return zcdp * *alpha + l / (*alpha - 1.0);
  }
  return zcdp + 2.0 * std::sqrt(zcdp * l);
}

double sigma_for_target(SigmaVariant variant, const SigmaParams& p) {
  check_delta(p.delta);
  if (p.n < 2) throw std::domain_error("sigma_for_target requires n >= 2");
  if (!(p.eps > 0.0)) throw std::domain_error("eps must be positive");
  double l = std::log(1.0 / p.delta);
  double log2n = std::log2(static_cast<double>(p.n));
  double ln_n = std::log(static_cast<double>(p.n));
  double ln_b = std::log1p(p.beta);

  auto require_ledp_range = [&](const char* which) {
    if (!(p.eps < 8.0 * l)) {
      throw std::domain_error(std::string(which) +
                              ": requires eps < 8*ln(1/delta)");
    }
  };

  switch (variant) {
    case SigmaVariant::ledp:
      require_ledp_range("ledp");
      return 4.0 * std::sqrt(p.c * log2n * l) / p.eps;
    case SigmaVariant::centralized:
      return 6.0 * std::sqrt(p.c * ln_n + l) / p.eps;
    case SigmaVariant::weighted: {
      require_ledp_range("weighted");
      if (!(p.beta > 0.0)) throw std::domain_error("beta must be positive");
      if (!(p.cmax >= 1.0)) throw std::domain_error("cmax must be >= 1");
      double grid = std::log(2.0 * p.cmax * p.n) / ln_b + 1.0;
      double k = p.c * log2n * grid;
      return 4.0 * std::sqrt(k * l) / p.eps;
    }
    case SigmaVariant::directed: {
      require_ledp_range("directed");
      if (!(p.beta > 0.0)) throw std::domain_error("beta must be positive");
      double grid = std::log(2.0 * std::pow(p.n, 1.5)) / ln_b + 1.0;
      double m = 2.0 * p.c * log2n * grid * (ln_n / ln_b);
      return 4.0 * std::sqrt(m * l) / p.eps;
    }
    case SigmaVariant::centralized_directed:
      return 8.0 * std::sqrt(p.c * ln_n + l) / p.eps;
  }
  throw std::logic_error("unreachable");
}

PrivacyBudget compose_sequential(std::span<const PrivacyBudget> parts) {
  PrivacyBudget out;
  for (const auto& b : parts) {
    out.zcdp += b.zcdp;
    out.pure_eps += b.pure_eps;
  }
  return out;
}

PrivacyBudget compose_parallel(std::span<const PrivacyBudget> parts,
                               Disjointness d) {
  PrivacyBudget out;
  for (const auto& b : parts) {
    out.zcdp = std::max(out.zcdp, b.zcdp);
    out.pure_eps = std::max(out.pure_eps, b.pure_eps);
  }
  if (d == Disjointness::two_cover) {
    out.zcdp *= 2.0;
    out.pure_eps *= 2.0;
  }
  return out;
}

int log2_repetitions(int n, double c) {
  if (n < 2) return 1;
  return std::max(1, ceil_count(c * std::log2(static_cast<double>(n))));
}

int weighted_grid_size(int n, double cmax, double beta) {
  if (!(beta > 0.0)) throw std::domain_error("beta must be positive");
  double span = std::log(2.0 * cmax * n) / std::log1p(beta);
  return std::max(1, ceil_count(span) + 1);
}

long long weighted_total_runs(int n, double cmax, double c, double beta) {
  return static_cast<long long>(log2_repetitions(n, c)) *
         weighted_grid_size(n, cmax, beta);
}

int directed_t_grid_size(int n, double beta) {
  if (!(beta > 0.0)) throw std::domain_error("beta must be positive");
  double span = std::log(static_cast<double>(n)) / std::log1p(beta);
  return std::max(1, ceil_count(span) + 1);
}

double ledger_dsg_ledp(int n, double c, double varsigma) {
  double s2 = varsigma * varsigma;
  return log2_repetitions(n, c) / s2;
}

double ledger_centralized_core(double varsigma) {
  return 1.0 / (varsigma * varsigma);
}

double ledger_weighted_dsg_ledp(int n, double cmax, double c, double beta,
                                double varsigma) {
  double s2 = varsigma * varsigma;
  return static_cast<double>(weighted_total_runs(n, cmax, c, beta)) / s2;
}

double ledger_centralized_directed_core(double varsigma) {
  return 1.5 / (varsigma * varsigma);
}

PrivacyBudget Accountant::round_cost(const NoiseSpec& spec, double sensitivity,
                                     Cover cover) {
  PrivacyBudget cost;
  if (spec.zero_noise()) return cost;
  double factor = cover == Cover::two_sided ? 2.0 : 1.0;
  switch (spec.kind) {
    case NoiseKind::gaussian:
      cost.zcdp = factor * sensitivity * sensitivity /
                  (2.0 * spec.scale * spec.scale);
      break;
    case NoiseKind::geometric:
      cost.pure_eps = factor * sensitivity * spec.scale;
      break;
    case NoiseKind::laplace:
      cost.pure_eps = factor * sensitivity / spec.scale;
      break;
  }
  return cost;
}

void Accountant::add_round(const std::string& phase, int round,
                           const NoiseSpec& spec, double sensitivity,
                           Cover cover) {
  PrivacyBudget cost = round_cost(spec, sensitivity, cover);
  LedgerEntry e;
  e.phase = phase;
  e.round = round;
  e.mechanism = spec.kind == NoiseKind::gaussian    ? "gaussian"
                : spec.kind == NoiseKind::geometric ? "geometric"
                                                    : "laplace";
  e.sensitivity = sensitivity;
  e.scale = spec.scale;
  e.cover = cover;
  e.zcdp_cost = cost.zcdp;
  e.eps_cost = cost.pure_eps;
  entries_.push_back(std::move(e));
  total_.zcdp += cost.zcdp;
  total_.pure_eps += cost.pure_eps;
}

nlohmann::json Accountant::to_json(double delta) const {
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& e : entries_) {
    rounds.push_back({{"phase", e.phase},
                      {"round", e.round},
                      {"mechanism", e.mechanism},
                      {"sensitivity", e.sensitivity},
                      {"scale", e.scale},
                      {"cover", e.cover == Cover::two_sided ? "two" : "one"},
                      {"zcdp_cost", e.zcdp_cost},
                      {"eps_cost", e.eps_cost},
                      {"post_processing", e.post_processing}});
  }
  return {{"entries", rounds},
          {"zcdp_total", total_.zcdp},
          {"pure_eps_total", total_.pure_eps},
          {"delta", delta},
          {"eps_at_delta", total_.eps_at(delta)}};
}

}  // namespace dsg
