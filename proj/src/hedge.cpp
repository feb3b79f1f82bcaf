#include "dsg/hedge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsg {

Hedge::Hedge(int experts, long long horizon) : horizon_(horizon) {
  if (experts < 1) throw std::invalid_argument("hedge: need at least 1 expert");
  if (horizon < 1) throw std::invalid_argument("hedge: horizon must be >= 1");
  log_weights_.assign(experts, 0.0);
  step_ = std::sqrt(std::log(static_cast<double>(experts)) /
                    static_cast<double>(horizon));
}

std::vector<double> Hedge::distribution() const {
  double max_lw = *std::max_element(log_weights_.begin(), log_weights_.end());
  std::vector<double> p(log_weights_.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp(log_weights_[i] - max_lw);
    sum += p[i];
  }
  for (auto& x : p) x /= sum;
  return p;
}

void Hedge::update(std::span<const double> losses) {
  if (static_cast<int>(losses.size()) != experts())
    throw std::invalid_argument("hedge: loss vector size mismatch");
  if (round_ >= horizon_)
    throw std::logic_error("hedge: horizon exhausted");
  for (double l : losses) {
    if (!std::isfinite(l))
      throw std::invalid_argument("hedge: non-finite loss entry");
  }
  for (std::size_t i = 0; i < log_weights_.size(); ++i) {
    log_weights_[i] -= step_ * losses[i];
  }
  ++round_;
}

RegretReport regret_report(
    const std::vector<std::vector<double>>& loss_history,
    const std::vector<std::vector<double>>& distribution_history) {
  if (loss_history.size() != distribution_history.size())
    throw std::invalid_argument("regret_report: history length mismatch");
  RegretReport out;
  if (loss_history.empty()) return out;
  std::size_t n = loss_history.front().size();
  std::vector<double> cumulative(n, 0.0);
  for (std::size_t t = 0; t < loss_history.size(); ++t) {
    const auto& m = loss_history[t];
    const auto& p = distribution_history[t];
    if (m.size() != n || p.size() != n)
      throw std::invalid_argument("regret_report: ragged history");
    for (std::size_t i = 0; i < n; ++i) {
      out.algorithm_loss += m[i] * p[i];
      cumulative[i] += m[i];
    }
  }
  auto best = std::min_element(cumulative.begin(), cumulative.end());
  out.best_expert = static_cast<int>(best - cumulative.begin());
  out.best_expert_loss = *best;
  out.regret = out.algorithm_loss - out.best_expert_loss;
  return out;
}

}  // namespace dsg
