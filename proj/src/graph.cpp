#include "dsg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dsg {

namespace {

void check_subset(int n, std::span<const Vertex> s, const char* what) {
  if (s.empty()) {
    throw std::invalid_argument(std::string(what) +
                                ": empty subset has undefined density");
  }
  for (Vertex v : s) {
    if (v < 0 || v >= n)
      throw std::out_of_range(std::string(what) + ": vertex id out of range");
  }
}

std::vector<char> membership(int n, std::span<const Vertex> s) {
  std::vector<char> in(n, 0);
  for (Vertex v : s) {
    if (in[v]) throw std::invalid_argument("duplicate vertex in subset");
    in[v] = 1;
  }
  return in;
}

}  // namespace

int DensityFraction::compare(const DensityFraction& other) const {
  __int128 lhs = static_cast<__int128>(num) * other.den;
  __int128 rhs = static_cast<__int128>(other.num) * den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& row : g.adj_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::invalid_argument("parallel edges are not allowed");
  }
  g.edge_count_ = static_cast<long long>(edges.size());
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& row = adj_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

NodeWeightedGraph::NodeWeightedGraph(Graph g, std::vector<double> costs)
    : graph_(std::move(g)), costs_(std::move(costs)) {
  if (static_cast<int>(costs_.size()) != graph_.vertex_count())
    throw std::invalid_argument("cost vector size mismatch");
  max_cost_ = 1.0;
  for (double c : costs_) {
    if (!(c >= 1.0))
      throw std::invalid_argument("node costs must be at least 1");
    max_cost_ = std::max(max_cost_, c);
  }
}

double NodeWeightedGraph::total_cost(std::span<const Vertex> s) const {
  double sum = 0.0;
  for (Vertex v : s) sum += costs_.at(v);
  return sum;
}

DirectedGraph DirectedGraph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  DirectedGraph g;
  g.out_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    g.out_[u].push_back(v);
  }
  for (auto& row : g.out_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::invalid_argument("parallel edges are not allowed");
  }
  g.edge_count_ = static_cast<long long>(edges.size());
  return g;
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : out_[u]) out.emplace_back(u, v);
  }
  return out;
}

Ordering Ordering::identity(int n) {
  Ordering o;
  o.perm.resize(n);
  o.position.resize(n);
  std::iota(o.perm.begin(), o.perm.end(), 0);
  std::iota(o.position.begin(), o.position.end(), 0);
  return o;
}

Ordering Ordering::from_perm(std::vector<Vertex> perm) {
  Ordering o;
  int n = static_cast<int>(perm.size());
  o.position.assign(n, -1);
  for (int rank = 0; rank < n; ++rank) {
    Vertex v = perm[rank];
    if (v < 0 || v >= n || o.position[v] != -1)
      throw std::invalid_argument("ordering is not a permutation of 0..n-1");
    o.position[v] = rank;
  }
  o.perm = std::move(perm);
  return o;
}

Ordering order_by_descending(std::span<const double> keys) {
  int n = static_cast<int>(keys.size());
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) {
    if (keys[a] != keys[b]) return keys[a] > keys[b];
    return a < b;
  });
  return Ordering::from_perm(std::move(perm));
}

long long induced_edge_count(const Graph& g, std::span<const Vertex> s) {
  check_subset(g.vertex_count(), s, "induced_edge_count");
  auto in = membership(g.vertex_count(), s);
  long long twice = 0;
  for (Vertex v : s) {
    for (Vertex u : g.neighbors(v)) {
      if (in[u]) ++twice;
    }
  }
  return twice / 2;
}

double density(const Graph& g, std::span<const Vertex> s) {
  return density_fraction(g, s).value();
}

DensityFraction density_fraction(const Graph& g, std::span<const Vertex> s) {
  return {induced_edge_count(g, s), static_cast<long long>(s.size())};
}

double weighted_density(const NodeWeightedGraph& g, std::span<const Vertex> s) {
  check_subset(g.vertex_count(), s, "weighted_density");
  return static_cast<double>(induced_edge_count(g.graph(), s)) /
         g.total_cost(s);
}

long long cross_edge_count(const DirectedGraph& g, std::span<const Vertex> s,
                           std::span<const Vertex> t) {
  check_subset(g.vertex_count(), s, "cross_edge_count");
  check_subset(g.vertex_count(), t, "cross_edge_count");
  auto in_t = membership(g.vertex_count(), t);
  long long count = 0;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : s) {
    if (seen[v]) continue;  // s may repeat via overlap with t, not itself
    seen[v] = 1;
    for (Vertex u : g.out_neighbors(v)) {
      if (in_t[u]) ++count;
    }
  }
  return count;
}

double directed_density(const DirectedGraph& g, std::span<const Vertex> s,
                        std::span<const Vertex> t) {
  long long m = cross_edge_count(g, s, t);
  return static_cast<double>(m) /
         std::sqrt(static_cast<double>(s.size()) * t.size());
}

std::vector<int> peel_counts(const Graph& g, const Ordering& sigma) {
  int n = g.vertex_count();
  if (sigma.size() != n)
    throw std::invalid_argument("ordering does not cover the graph");
  std::vector<int> q(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    int rank = sigma.position[v];
    int count = 0;
    for (Vertex u : g.neighbors(v)) {
      if (sigma.position[u] < rank) ++count;
    }
    q[v] = count;
  }
  return q;
}

PrefixResult best_prefix(const Graph& g, const Ordering& sigma) {
  int n = g.vertex_count();
  if (sigma.size() != n)
    throw std::invalid_argument("ordering does not cover the graph");
  if (n == 0) throw std::invalid_argument("empty graph has no prefix");
  auto q = peel_counts(g, sigma);
  long long edges = 0;
  DensityFraction best{-1, 1};
  int best_len = 0;
  for (int len = 1; len <= n; ++len) {
    edges += q[sigma.perm[len - 1]];
    DensityFraction cur{edges, len};
    if (cur.compare(best) > 0) {
      best = cur;
      best_len = len;
    }
  }
  PrefixResult out;
  out.set.assign(sigma.perm.begin(), sigma.perm.begin() + best_len);
  out.density = best;
  return out;
}

}  // namespace dsg
