#include "dsg/pure_peel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dsg {

double pure_eps_per_round(double total_eps, double eta, int n) {
  if (!(total_eps > 0) || !(eta > 0))
    throw std::invalid_argument("pure peeling: eps and eta must be positive");
  if (n < 2) return total_eps;
  return total_eps * eta / std::log(static_cast<double>(n));
}

PureRun simple_pure_ledp(const Graph& g, double eps_per_round, double eta,
                         std::uint64_t seed, const RunOptions& opts) {
  if (!(eta > 0)) throw std::invalid_argument("pure peeling: eta must be > 0");
  if (eps_per_round < 0 || (eps_per_round == 0 && !opts.zero_noise))
    throw std::invalid_argument("pure peeling: eps_per_round must be > 0");
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("pure peeling: empty graph");

  NoiseSpec spec = opts.zero_noise ? NoiseSpec::geometric(0.0)
                                   : NoiseSpec::geometric(eps_per_round);
  double gamma = std::exp(eps_per_round);

  ProtocolSession session(seed, {opts.record_transcript, opts.zero_noise});
  PureRun run;
  VertexSet best_set;
  double best_rho = -std::numeric_limits<double>::infinity();

  session.run(g.adjacency(), "pure-peel", [&](Curator& curator) {
    VertexSet survivors = curator.all_parties();
    std::vector<char> member(n, 1);
    int round = 1;
    while (!survivors.empty()) {
      const std::uint64_t path[] = {stream_domain::kPureNoise,
                                    static_cast<std::uint64_t>(round)};
      auto noisy = curator.collect(
          "noisy_degree", survivors, spec, 1.0, Cover::two_sided, path,
          [&](const NodeView& view, RngStream& s) {
            double d = view.degree_into(member);
            if (opts.zero_noise) return d;
            return d + static_cast<double>(s.sym_geometric(gamma));
          });

      double raw_sum = 0.0;
      double clamped_sum = 0.0;
      for (double d : noisy) {
        raw_sum += d;
        clamped_sum += std::max(d, 0.0);
      }
      double size = static_cast<double>(survivors.size());
      double rho_hat = raw_sum / (2.0 * size);
      double threshold = (1.0 + eta) * clamped_sum / size;

      if (rho_hat > best_rho) {
        best_rho = rho_hat;
        best_set = survivors;
      }

      VertexSet next;
      for (std::size_t i = 0; i < survivors.size(); ++i) {
        if (std::max(noisy[i], 0.0) > threshold) {
          next.push_back(survivors[i]);
        } else {
          member[survivors[i]] = 0;
        }
      }
      if (next.size() >= survivors.size())
        throw std::logic_error("pure peeling: no vertex fell below threshold");

      run.log.push_back({static_cast<int>(survivors.size()),
                         static_cast<int>(survivors.size() - next.size()),
                         rho_hat, threshold, survivors});
      curator.post("round_summary", {{"round", round},
                                     {"survivors", survivors.size()},
                                     {"removed", survivors.size() - next.size()},
                                     {"rho_hat", rho_hat},
                                     {"threshold", threshold}});
      survivors = std::move(next);
      ++round;
    }
    curator.post("selected", {{"rho_hat", best_rho}});
    return 0;
  });

  run.rounds = static_cast<int>(run.log.size());
  run.best = {std::move(best_set), best_rho, session.budget(),
              session.zero_noise_used()};
  run.transcript = session.transcript();
  return run;
}

}  // namespace dsg
