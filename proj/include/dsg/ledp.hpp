#ifndef DSG_LEDP_HPP
#define DSG_LEDP_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dsg/graph.hpp"
#include "dsg/privacy.hpp"
#include "dsg/rng.hpp"
#include "json.hpp"

namespace dsg {

// A node callback tried to reach data outside its own adjacency list.
struct BoundaryViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Replayed curator diverged from the recorded transcript.
struct ReplayMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

// What a node's local randomizer is allowed to see: its own adjacency list
// plus whatever the curator broadcast. There is no access path to any other
// node's edges.
class NodeView {
 public:
  NodeView(Vertex id, const std::vector<std::vector<Vertex>>* adj)
      : id_(id), adj_(adj) {}

  Vertex id() const { return id_; }
  std::span<const Vertex> neighbors() const { return (*adj_)[id_]; }
  int degree() const { return static_cast<int>((*adj_)[id_].size()); }

  // Guarded accessor; anything but the node's own id is a hard fault.
  std::span<const Vertex> adjacency_of(Vertex v) const;

  // q(sigma) for this node: neighbors that precede it in sigma.
  int preceding_count(const Ordering& sigma) const;
  // Degree into the set marked by `member` (indexed by vertex id).
  int degree_into(const std::vector<char>& member) const;

 private:
  Vertex id_;
  const std::vector<std::vector<Vertex>>* adj_;
};

struct TranscriptRound {
  std::string phase;
  int round = 0;
  bool post_processing = false;
  std::string randomizer;          // empty for post-processing entries
  std::vector<Vertex> parties;
  nlohmann::json params;           // declared noise spec / sensitivity / cover
  std::vector<double> outputs;
  nlohmann::json note;             // curator-derived values

  bool operator==(const TranscriptRound& other) const;
};

// Append-only public record of one protocol run, one entry per round.
class Transcript {
 public:
  void append(TranscriptRound round) { rounds_.push_back(std::move(round)); }
  const std::vector<TranscriptRound>& rounds() const { return rounds_; }
  std::size_t size() const { return rounds_.size(); }

  bool operator==(const Transcript& other) const {
    return rounds_ == other.rounds_;
  }

  void to_jsonl(std::ostream& out) const;
  static Transcript from_jsonl(std::istream& in);

 private:
  std::vector<TranscriptRound> rounds_;
};

struct SessionOptions {
  bool record_transcript = true;
  bool allow_zero_noise = false;
};

class ProtocolSession;

using NodeRandomizer = std::function<double(const NodeView&, RngStream&)>;

// Handle given to curator programs. Everything a program does flows through
// here, so the transcript and the ledger cannot drift from the computation.
class Curator {
 public:
  int n() const { return static_cast<int>(adj_->size()); }

  // Curator-side randomness; appears to observers as post-processing.
  RngStream stream(std::initializer_list<std::uint64_t> path) const;

  // Publishes a derived value; zero privacy cost.
  void post(const std::string& label, nlohmann::json note = nullptr);

  // One LEDP round: queries `parties` (ascending ids), hands each node a view
  // and a private stream at noise_path + {node}, and records the outputs.
  std::vector<double> collect(const std::string& randomizer,
                              const std::vector<Vertex>& parties,
                              const NoiseSpec& spec, double sensitivity,
                              Cover cover,
                              std::span<const std::uint64_t> noise_path,
                              const NodeRandomizer& fn);

  // A curator-side noisy query over the whole input; only the centralized
  // algorithms use this, it has no local implementation.
  double central_mechanism(const std::string& randomizer,
                           const NoiseSpec& spec, double sensitivity,
                           std::span<const std::uint64_t> noise_path,
                           double exact_value);

  std::vector<Vertex> all_parties() const;

 private:
  friend class ProtocolSession;
  Curator(ProtocolSession* session,
          const std::vector<std::vector<Vertex>>* adj, std::string phase)
      : session_(session), adj_(adj), phase_(std::move(phase)) {}

  ProtocolSession* session_;
  const std::vector<std::vector<Vertex>>* adj_;
  std::string phase_;
};

// One protocol run: an untrusted curator and n node agents in a single
// process. A session may span several phases (and graphs) that compose
// sequentially into one budget and one transcript.
class ProtocolSession {
 public:
  explicit ProtocolSession(std::uint64_t seed, SessionOptions opts = {});

  // Replay mode: collect() returns the recorded outputs instead of invoking
  // node code, so the program must be a pure function of the transcript.
  ProtocolSession(std::uint64_t seed, const Transcript& source,
                  SessionOptions opts = {});

  template <typename F>
  auto run(const std::vector<std::vector<Vertex>>& adjacency,
           const std::string& phase, F&& program) {
    Curator curator(this, &adjacency, phase);
    return program(curator);
  }

  const Transcript& transcript() const { return transcript_; }
  const Accountant& accountant() const { return accountant_; }
  PrivacyBudget budget() const { return accountant_.total(); }
  bool zero_noise_used() const { return zero_noise_used_; }
  const RngRoot& root() const { return root_; }

 private:
  friend class Curator;

  RngRoot root_;
  SessionOptions opts_;
  Transcript transcript_;
  Accountant accountant_;
  int next_round_ = 0;
  bool zero_noise_used_ = false;
  const Transcript* replay_source_ = nullptr;
  std::size_t replay_cursor_ = 0;
};

}  // namespace dsg

#endif  // DSG_LEDP_HPP
