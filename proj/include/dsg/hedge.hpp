#ifndef DSG_HEDGE_HPP
#define DSG_HEDGE_HPP

#include <span>
#include <vector>

namespace dsg {

// Exponential-weights learner over n experts with a fixed horizon. Weights
// live in log domain: T can reach n^2 / noise^2, at which point raw weights
// underflow, and order comparisons on log weights stay exact.
class Hedge {
 public:
  Hedge(int experts, long long horizon);

  int experts() const { return static_cast<int>(log_weights_.size()); }
  long long horizon() const { return horizon_; }
  long long round() const { return round_; }
  double step() const { return step_; }

  const std::vector<double>& log_weights() const { return log_weights_; }

  // p_i proportional to w_i; stable softmax.
  std::vector<double> distribution() const;

  // w_i <- w_i * exp(-step * loss_i). Losses may be any finite reals.
  void update(std::span<const double> losses);

 private:
  std::vector<double> log_weights_;
  long long horizon_;
  long long round_ = 0;
  double step_;
};

struct RegretReport {
  double algorithm_loss = 0.0;
  double best_expert_loss = 0.0;
  double regret = 0.0;
  int best_expert = -1;
};

// Regret against the best fixed expert, computed on the supplied (mean) loss
// history.
RegretReport regret_report(
    const std::vector<std::vector<double>>& loss_history,
    const std::vector<std::vector<double>>& distribution_history);

}  // namespace dsg

#endif  // DSG_HEDGE_HPP
