#include "dsg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dsg/rng.hpp"

namespace dsg {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(what) + ": probability not in [0,1]");
}

// Bernoulli(p) that consumes exactly one draw, with p = 0 and p = 1 exact.
bool flip(RngStream& s, double p) {
  double u = s.uniform();
  return u < p;
}

std::vector<Vertex> random_subset(int n, int k, RngStream& s) {
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(s.uniform_index(n - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(k);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

Graph gnp(int n, double p, std::uint64_t seed) {
  check_probability(p, "gnp");
  RngRoot root(seed);
  RngStream s = root.stream({stream_domain::kGenerator, 0});
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (p >= 1.0 || (p > 0.0 && flip(s, p))) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

PlantedGraph planted_dense(int n, int k, double p_in, double p_out,
                           std::uint64_t seed) {
  check_probability(p_in, "planted_dense");
  check_probability(p_out, "planted_dense");
  if (k > n) throw std::invalid_argument("planted_dense: k exceeds n");
  RngRoot root(seed);
  RngStream pick = root.stream({stream_domain::kGenerator, 1});
  auto block = random_subset(n, k, pick);
  std::vector<char> in_block(n, 0);
  for (Vertex v : block) in_block[v] = 1;

  RngStream s = root.stream({stream_domain::kGenerator, 2});
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      double p = (in_block[u] && in_block[v]) ? p_in : p_out;
      if (p >= 1.0 || (p > 0.0 && flip(s, p))) edges.emplace_back(u, v);
    }
  }
  return {Graph::from_edges(n, edges), std::move(block)};
}

std::vector<double> unit_costs(int n) { return std::vector<double>(n, 1.0); }

std::vector<double> random_costs(int n, double lo, double hi,
                                 std::uint64_t seed) {
  if (!(lo >= 1.0) || !(hi >= lo))
    throw std::invalid_argument("random_costs: need 1 <= lo <= hi");
  RngRoot root(seed);
  RngStream s = root.stream({stream_domain::kGenerator, 3});
  std::vector<double> costs(n);
  for (auto& c : costs) c = lo + (hi - lo) * s.uniform();
  return costs;
}

DirectedGraph random_digraph(int n, double p, std::uint64_t seed) {
  check_probability(p, "random_digraph");
  RngRoot root(seed);
  RngStream s = root.stream({stream_domain::kGenerator, 4});
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (p >= 1.0 || (p > 0.0 && flip(s, p))) edges.emplace_back(u, v);
    }
  }
  return DirectedGraph::from_edges(n, edges);
}

PlantedDigraph planted_directed(int n, int s_size, int t_size, double p_in,
                                double p_out, std::uint64_t seed) {
  check_probability(p_in, "planted_directed");
  check_probability(p_out, "planted_directed");
  if (s_size + t_size > n)
    throw std::invalid_argument("planted_directed: blocks exceed n");
  RngRoot root(seed);
  RngStream pick = root.stream({stream_domain::kGenerator, 5});
  auto both = random_subset(n, s_size + t_size, pick);
  VertexSet s_set(both.begin(), both.begin() + s_size);
  VertexSet t_set(both.begin() + s_size, both.end());
  std::vector<char> in_s(n, 0), in_t(n, 0);
  for (Vertex v : s_set) in_s[v] = 1;
  for (Vertex v : t_set) in_t[v] = 1;

  RngStream s = root.stream({stream_domain::kGenerator, 6});
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      double p = (in_s[u] && in_t[v]) ? p_in : p_out;
      if (p >= 1.0 || (p > 0.0 && flip(s, p))) edges.emplace_back(u, v);
    }
  }
  return {DirectedGraph::from_edges(n, edges), std::move(s_set),
          std::move(t_set)};
}

}  // namespace dsg
