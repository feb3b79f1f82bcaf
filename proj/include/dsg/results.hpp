#ifndef DSG_RESULTS_HPP
#define DSG_RESULTS_HPP

#include "dsg/graph.hpp"
#include "dsg/ledp.hpp"
#include "dsg/privacy.hpp"

namespace dsg {

// Output of one private densest-subgraph run. noisy_density is the estimate
// the selection actually used; the exact density of `members` is computed by
// the evaluation harness after the run, never inside it.
struct DensityResult {
  VertexSet members;
  double noisy_density = 0.0;
  PrivacyBudget budget;
  bool zero_noise = false;  // produced in debug mode, not private
};

struct Candidate {
  VertexSet set;
  double noisy_density = 0.0;
};

struct LedpRun {
  DensityResult best;
  std::vector<Candidate> candidates;  // filled when keep_candidates is set
  Transcript transcript;              // filled when record_transcript is set
  // sqrt(T) * varsigma >= n, the condition the utility guarantees assume.
  bool noise_hypothesis_met = true;
};

struct RunOptions {
  bool zero_noise = false;  // scale-0 debug mode, tagged non-private
  bool record_transcript = false;
  bool keep_candidates = false;
  int reps_override = 0;  // 0 = derive from (n, c)
};

}  // namespace dsg

#endif  // DSG_RESULTS_HPP
