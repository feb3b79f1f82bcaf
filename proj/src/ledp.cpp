#include "dsg/ledp.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

namespace dsg {

std::span<const Vertex> NodeView::adjacency_of(Vertex v) const {
  if (v != id_) {
    throw BoundaryViolation("node " + std::to_string(id_) +
                            " requested the adjacency list of node " +
                            std::to_string(v) + ", which is outside its view");
  }
  return (*adj_)[id_];
}

int NodeView::preceding_count(const Ordering& sigma) const {
  int rank = sigma.position.at(id_);
  int count = 0;
  for (Vertex u : neighbors()) {
    if (sigma.position[u] < rank) ++count;
  }
  return count;
}

int NodeView::degree_into(const std::vector<char>& member) const {
  int count = 0;
  for (Vertex u : neighbors()) {
    if (member[u]) ++count;
  }
  return count;
}

bool TranscriptRound::operator==(const TranscriptRound& other) const {
  return phase == other.phase && round == other.round &&
         post_processing == other.post_processing &&
         randomizer == other.randomizer && parties == other.parties &&
         params == other.params && outputs == other.outputs &&
         note == other.note;
}

void Transcript::to_jsonl(std::ostream& out) const {
  for (const auto& r : rounds_) {
    nlohmann::json j{{"phase", r.phase},
                     {"round", r.round},
                     {"post", r.post_processing},
                     {"randomizer", r.randomizer},
                     {"parties", r.parties},
                     {"params", r.params},
                     {"outputs", r.outputs},
                     {"note", r.note}};
    out << j.dump() << "\n";
  }
}

Transcript Transcript::from_jsonl(std::istream& in) {
  Transcript t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    TranscriptRound r;
    r.phase = j.at("phase").get<std::string>();
    r.round = j.at("round").get<int>();
    r.post_processing = j.at("post").get<bool>();
    r.randomizer = j.at("randomizer").get<std::string>();
    r.parties = j.at("parties").get<std::vector<Vertex>>();
    r.params = j.at("params");
    r.outputs = j.at("outputs").get<std::vector<double>>();
    r.note = j.at("note");
    t.append(std::move(r));
  }
  return t;
}

RngStream Curator::stream(std::initializer_list<std::uint64_t> path) const {
  std::vector<std::uint64_t> full{stream_domain::kCurator};
  full.insert(full.end(), path.begin(), path.end());
  return session_->root_.stream(
      std::span<const std::uint64_t>(full.data(), full.size()));
}

void Curator::post(const std::string& label, nlohmann::json note) {
  int round = session_->next_round_++;
  if (!session_->opts_.record_transcript) return;
  TranscriptRound r;
  r.phase = phase_;
  r.round = round;
  r.post_processing = true;
  r.randomizer = "";
  r.params = {{"label", label}};
  r.note = std::move(note);
  session_->transcript_.append(std::move(r));
}

std::vector<double> Curator::collect(const std::string& randomizer,
                                     const std::vector<Vertex>& parties,
                                     const NoiseSpec& spec, double sensitivity,
                                     Cover cover,
                                     std::span<const std::uint64_t> noise_path,
                                     const NodeRandomizer& fn) {
  if (!std::is_sorted(parties.begin(), parties.end()))
    throw std::invalid_argument("collect: parties must be in ascending order");
  if (spec.zero_noise()) {
    if (!session_->opts_.allow_zero_noise)
      throw std::invalid_argument(
          "zero-noise mode requested but not enabled for this session");
    session_->zero_noise_used_ = true;
  }

  int round = session_->next_round_++;
  session_->accountant_.add_round(phase_, round, spec, sensitivity, cover);

  std::vector<double> outputs;
  if (session_->replay_source_) {
    // Skip recorded post entries; the replayed curator regenerates those.
    const auto& src = session_->replay_source_->rounds();
    while (session_->replay_cursor_ < src.size() &&
           src[session_->replay_cursor_].post_processing) {
      ++session_->replay_cursor_;
    }
    if (session_->replay_cursor_ >= src.size())
      throw ReplayMismatch("replay ran past the end of the transcript");
    const TranscriptRound& rec = src[session_->replay_cursor_++];
    if (rec.randomizer != randomizer || rec.parties != parties)
      throw ReplayMismatch("replayed round does not match the record");
    outputs = rec.outputs;
  } else {
    outputs.reserve(parties.size());
    std::vector<std::uint64_t> path(noise_path.begin(), noise_path.end());
    path.push_back(0);
    for (Vertex v : parties) {
      path.back() = static_cast<std::uint64_t>(v);
      RngStream stream = session_->root_.stream(
          std::span<const std::uint64_t>(path.data(), path.size()));
      NodeView view(v, adj_);
      outputs.push_back(fn(view, stream));
    }
  }

  if (session_->opts_.record_transcript) {
    TranscriptRound r;
    r.phase = phase_;
    r.round = round;
    r.randomizer = randomizer;
    r.parties = parties;
    r.params = {{"kind", spec.kind == NoiseKind::gaussian    ? "gaussian"
                         : spec.kind == NoiseKind::geometric ? "geometric"
                                                             : "laplace"},
                {"scale", spec.scale},
                {"sensitivity", sensitivity},
                {"cover", cover == Cover::two_sided ? "two" : "one"}};
    r.outputs = outputs;
    session_->transcript_.append(std::move(r));
  }
  return outputs;
}

double Curator::central_mechanism(const std::string& randomizer,
                                  const NoiseSpec& spec, double sensitivity,
                                  std::span<const std::uint64_t> noise_path,
                                  double exact_value) {
  if (spec.zero_noise()) {
    if (!session_->opts_.allow_zero_noise)
      throw std::invalid_argument(
          "zero-noise mode requested but not enabled for this session");
    session_->zero_noise_used_ = true;
  }
  int round = session_->next_round_++;
  session_->accountant_.add_round(phase_, round, spec, sensitivity,
                                  Cover::one_sided);
  double value;
  if (session_->replay_source_) {
    const auto& src = session_->replay_source_->rounds();
    while (session_->replay_cursor_ < src.size() &&
           src[session_->replay_cursor_].post_processing) {
      ++session_->replay_cursor_;
    }
    if (session_->replay_cursor_ >= src.size())
      throw ReplayMismatch("replay ran past the end of the transcript");
    const TranscriptRound& rec = src[session_->replay_cursor_++];
    if (rec.randomizer != randomizer || rec.outputs.size() != 1)
      throw ReplayMismatch("replayed round does not match the record");
    value = rec.outputs[0];
  } else {
    RngStream stream = session_->root_.stream(noise_path);
    double noise = 0.0;
    switch (spec.kind) {
      case NoiseKind::gaussian:
        noise = stream.gaussian(spec.scale);
        break;
      case NoiseKind::laplace:
        noise = stream.laplace(spec.scale);
        break;
      case NoiseKind::geometric:
        noise = spec.zero_noise()
                    ? 0.0
                    : static_cast<double>(
                          stream.sym_geometric(std::exp(spec.scale)));
        break;
    }
    value = exact_value + noise;
  }
  if (session_->opts_.record_transcript) {
    TranscriptRound r;
    r.phase = phase_;
    r.round = round;
    r.randomizer = randomizer;
    r.params = {{"kind", spec.kind == NoiseKind::gaussian    ? "gaussian"
                         : spec.kind == NoiseKind::geometric ? "geometric"
                                                             : "laplace"},
                {"scale", spec.scale},
                {"sensitivity", sensitivity},
                {"cover", "one"},
                {"central", true}};
    r.outputs = {value};
    session_->transcript_.append(std::move(r));
  }
  return value;
}

std::vector<Vertex> Curator::all_parties() const {
  std::vector<Vertex> all(n());
  for (int i = 0; i < n(); ++i) all[i] = i;
  return all;
}

ProtocolSession::ProtocolSession(std::uint64_t seed, SessionOptions opts)
    : root_(seed), opts_(opts) {}

ProtocolSession::ProtocolSession(std::uint64_t seed, const Transcript& source,
                                 SessionOptions opts)
    : root_(seed), opts_(opts), replay_source_(&source) {}

}  // namespace dsg
