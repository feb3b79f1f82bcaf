#include "dsg/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace dsg {

namespace {

struct RawFile {
  long header_n = -1;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, double>> weights;
};

RawFile tokenize(std::istream& in) {
  RawFile raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first.rfind("n=", 0) == 0) {
      try {
        raw.header_n = std::stol(first.substr(2));
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad header");
      }
      continue;
    }
    if (first == "w") {
      std::string v;
      double c;
      if (!(ls >> v >> c))
        throw ParseError("line " + std::to_string(lineno) +
                         ": weight line needs \"w <vertex> <cost>\"");
      raw.weights.emplace_back(v, c);
      continue;
    }
    std::string second;
    if (!(ls >> second))
      throw ParseError("line " + std::to_string(lineno) +
                       ": edge line needs two endpoints");
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) +
                       ": trailing tokens on edge line");
    raw.edges.emplace_back(first, second);
  }
  return raw;
}

bool parse_int(const std::string& s, long& out) {
  if (s.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stol(s, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == s.size();
}

struct LabelMap {
  int n = 0;
  std::vector<std::string> labels;
  std::map<std::string, Vertex> ids;

  Vertex id_of(const std::string& label) {
    auto it = ids.find(label);
    if (it != ids.end()) return it->second;
    Vertex v = static_cast<Vertex>(labels.size());
    labels.push_back(label);
    ids.emplace(label, v);
    return v;
  }
};

// With a header every label must be an integer id below n; without one,
// labels get dense ids in order of first appearance.
LabelMap map_labels(const RawFile& raw) {
  LabelMap m;
  if (raw.header_n >= 0) {
    m.n = static_cast<int>(raw.header_n);
    m.labels.reserve(m.n);
    for (int i = 0; i < m.n; ++i) {
      m.labels.push_back(std::to_string(i));
      m.ids.emplace(m.labels.back(), i);
    }
    auto check = [&](const std::string& s) {
      long v;
      if (!parse_int(s, v) || v < 0 || v >= raw.header_n)
        throw ParseError("vertex \"" + s + "\" outside header range n=" +
                         std::to_string(raw.header_n));
    };
    for (const auto& [u, v] : raw.edges) {
      check(u);
      check(v);
    }
    for (const auto& [v, c] : raw.weights) {
      (void)c;
      check(v);
    }
    return m;
  }
  for (const auto& [u, v] : raw.edges) {
    m.id_of(u);
    m.id_of(v);
  }
  for (const auto& [v, c] : raw.weights) {
    (void)c;
    m.id_of(v);
  }
  m.n = static_cast<int>(m.labels.size());
  return m;
}

std::vector<Edge> map_edges(const RawFile& raw, LabelMap& m) {
  std::vector<Edge> edges;
  edges.reserve(raw.edges.size());
  for (const auto& [u, v] : raw.edges)
    edges.emplace_back(m.id_of(u), m.id_of(v));
  return edges;
}

template <typename T>
T read_file_with(const std::string& path, T (*reader)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return reader(in);
}

void write_labels_header(std::ostream& out, int n) { out << "n=" << n << "\n"; }

std::string label_of(const std::vector<std::string>* labels, Vertex v) {
  if (labels && v < static_cast<Vertex>(labels->size())) return (*labels)[v];
  return std::to_string(v);
}

}  // namespace

LoadedGraph read_edge_list(std::istream& in) {
  RawFile raw = tokenize(in);
  if (!raw.weights.empty())
    throw ParseError("weight lines in an unweighted edge list");
  LabelMap m = map_labels(raw);
  auto edges = map_edges(raw, m);
  try {
    return {Graph::from_edges(m.n, edges), std::move(m.labels)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

LoadedGraph read_edge_list_file(const std::string& path) {
  return read_file_with(path, read_edge_list);
}

LoadedWeightedGraph read_weighted_edge_list(std::istream& in) {
  RawFile raw = tokenize(in);
  LabelMap m = map_labels(raw);
  auto edges = map_edges(raw, m);
  std::vector<double> costs(m.n, 1.0);
  for (const auto& [v, c] : raw.weights) costs[m.id_of(v)] = c;
  try {
    return {NodeWeightedGraph(Graph::from_edges(m.n, edges), std::move(costs)),
            std::move(m.labels)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

LoadedWeightedGraph read_weighted_edge_list_file(const std::string& path) {
  return read_file_with(path, read_weighted_edge_list);
}

LoadedDigraph read_directed_edge_list(std::istream& in) {
  RawFile raw = tokenize(in);
  if (!raw.weights.empty())
    throw ParseError("weight lines in a directed edge list");
  LabelMap m = map_labels(raw);
  auto edges = map_edges(raw, m);
  try {
    return {DirectedGraph::from_edges(m.n, edges), std::move(m.labels)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

LoadedDigraph read_directed_edge_list_file(const std::string& path) {
  return read_file_with(path, read_directed_edge_list);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>* labels) {
  write_labels_header(out, g.vertex_count());
  for (auto [u, v] : g.edges())
    out << label_of(labels, u) << " " << label_of(labels, v) << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_edge_list(out, g);
}

void write_weighted_edge_list(std::ostream& out, const NodeWeightedGraph& g,
                              const std::vector<std::string>* labels) {
  write_labels_header(out, g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.cost(v) != 1.0)
      out << "w " << label_of(labels, v) << " " << g.cost(v) << "\n";
  }
  for (auto [u, v] : g.graph().edges())
    out << label_of(labels, u) << " " << label_of(labels, v) << "\n";
}

void write_directed_edge_list(std::ostream& out, const DirectedGraph& g,
                              const std::vector<std::string>* labels) {
  write_labels_header(out, g.vertex_count());
  for (auto [u, v] : g.edges())
    out << label_of(labels, u) << " " << label_of(labels, v) << "\n";
}

void write_directed_edge_list_file(const std::string& path,
                                   const DirectedGraph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_directed_edge_list(out, g);
}

}  // namespace dsg
