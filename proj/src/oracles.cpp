#include "dsg/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace dsg {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint32_t> masks(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) masks[v] |= (1u << u);
  }
  return masks;
}

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet s;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1u) s.push_back(v);
  }
  return s;
}

bool lex_smaller(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---- Dinic max flow with 64-bit capacities ----

class Dinic {
 public:
  explicit Dinic(int nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

  void add_edge(int from, int to, long long cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0)
        flow += f;
    }
    return flow;
  }

  // Source side of the min cut, valid after max_flow.
  std::vector<char> reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> bfs_q;
    bfs_q.push(s);
    seen[s] = 1;
    while (!bfs_q.empty()) {
      int v = bfs_q.front();
      bfs_q.pop();
      for (int e = head_[v]; e != -1; e = arcs_[e].next) {
        if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) {
          seen[arcs_[e].to] = 1;
          bfs_q.push(arcs_[e].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[v]; e != -1; e = arcs_[e].next) {
        if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
          level_[arcs_[e].to] = level_[v] + 1;
          q.push(arcs_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (int& e = iter_[v]; e != -1; e = arcs_[e].next) {
      Arc& a = arcs_[e];
      if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
        long long d = dfs(a.to, t, std::min(limit, a.cap));
        if (d > 0) {
          a.cap -= d;
          arcs_[e ^ 1].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

// Is there a nonempty S with |E(S)| > (a/b)|S|? If so, return one.
bool denser_than(const Graph& g, long long a, long long b, VertexSet* out) {
  int n = g.vertex_count();
  long long m = g.edge_count();
  int source = n;
  int sink = n + 1;
  Dinic dinic(n + 2);
  long long big = m * b;
  for (Vertex v = 0; v < n; ++v) {
    dinic.add_edge(source, v, big);
    dinic.add_edge(v, sink, big + 2 * a - b * g.degree(v));
  }
  for (auto [u, v] : g.edges()) {
    dinic.add_edge(u, v, b);
    dinic.add_edge(v, u, b);
  }
  long long flow = dinic.max_flow(source, sink);
  if (flow >= big * n) return false;
  auto seen = dinic.reachable(source);
  out->clear();
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) out->push_back(v);
  }
  return !out->empty();
}

}  // namespace

OracleResult exact_dsg_bruteforce(const Graph& g, int limit) {
  int n = g.vertex_count();
  if (n > limit || n > 30)
    throw std::invalid_argument("bruteforce: graph exceeds enumeration limit");
  if (n == 0) throw std::invalid_argument("bruteforce: empty graph");
  auto masks = adjacency_masks(g);
  DensityFraction best{-1, 1};
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    long long twice = 0;
    for (std::uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      twice += std::popcount(masks[v] & mask);
    }
    DensityFraction cur{twice / 2, std::popcount(mask)};
    int cmp = cur.compare(best);
    if (cmp > 0 ||
        (cmp == 0 && lex_smaller(mask_to_set(mask), mask_to_set(best_mask)))) {
      best = cur;
      best_mask = mask;
    }
  }
  return {mask_to_set(best_mask), best};
}

WeightedOracleResult exact_weighted_bruteforce(const NodeWeightedGraph& g,
                                               int limit) {
  int n = g.vertex_count();
  if (n > limit || n > 30)
    throw std::invalid_argument("bruteforce: graph exceeds enumeration limit");
  if (n == 0) throw std::invalid_argument("bruteforce: empty graph");
  auto masks = adjacency_masks(g.graph());
  double best = -1.0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    long long twice = 0;
    double cost = 0.0;
    for (std::uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      twice += std::popcount(masks[v] & mask);
      cost += g.cost(v);
    }
    double cur = static_cast<double>(twice / 2) / cost;
    if (cur > best) {
      best = cur;
      best_mask = mask;
    }
  }
  return {mask_to_set(best_mask), best};
}

DirectedOracleResult exact_directed_bruteforce(const DirectedGraph& g,
                                               int limit) {
  int n = g.vertex_count();
  if (n > limit || n > 15)
    throw std::invalid_argument(
        "directed bruteforce: graph exceeds enumeration limit");
  if (n == 0) throw std::invalid_argument("directed bruteforce: empty graph");
  std::vector<std::uint32_t> out_masks(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.out_neighbors(v)) out_masks[v] |= (1u << u);
  }
  long long best_m = -1;
  long long best_st = 1;
  std::uint32_t best_s = 0, best_t = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    for (std::uint32_t t = 1; t < (1u << n); ++t) {
      long long m = 0;
      for (std::uint32_t rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        m += std::popcount(out_masks[v] & t);
      }
      long long st =
          static_cast<long long>(std::popcount(s)) * std::popcount(t);
      // Compare m/sqrt(st) exactly via m^2 * st'.
      __int128 lhs = static_cast<__int128>(m) * m * best_st;
      __int128 rhs = static_cast<__int128>(best_m) * best_m * st;
      if (best_m < 0 || lhs > rhs) {
        best_m = m;
        best_st = st;
        best_s = s;
        best_t = t;
      }
    }
  }
  DirectedOracleResult out;
  out.s = mask_to_set(best_s);
  out.t = mask_to_set(best_t);
  out.cross_edges = best_m;
  out.density = static_cast<double>(best_m) /
                std::sqrt(static_cast<double>(best_st));
  return out;
}

OracleResult exact_dsg_flow(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("flow oracle: empty graph");
  if (g.edge_count() == 0) return {{0}, {0, 1}};

  // Densities are fractions with denominator at most n, so distinct values
  // are at least 1/n^2 apart. Search the lattice k / (2 n^2), maintaining
  // k_lo strictly feasible (some subset is denser) and k_hi infeasible.
  long long lattice = 2LL * n * n;

  // Largest k with k/lattice strictly below the achieved density p/q.
  auto snap_below = [&](const DensityFraction& d) {
    __int128 scaled = static_cast<__int128>(d.num) * lattice;
    return static_cast<long long>((scaled - 1) / d.den);
  };

  OracleResult seed = charikar_greedy(g);
  VertexSet best_set = seed.set;
  DensityFraction best = seed.density;

  long long k_lo = snap_below(best);
  long long k_hi = lattice * ((n + 1) / 2 + 1);  // density cap (n-1)/2

  VertexSet candidate;
  while (k_hi - k_lo > 1) {
    long long k = k_lo + (k_hi - k_lo) / 2;
    if (denser_than(g, k, lattice, &candidate)) {
      long long edges = induced_edge_count(g, candidate);
      DensityFraction cur{edges, static_cast<long long>(candidate.size())};
      if (cur.compare(best) > 0) {
        best = cur;
        best_set = candidate;
      }
      k_lo = std::max(k, snap_below(best));
    } else {
      k_hi = k;
    }
  }
  std::sort(best_set.begin(), best_set.end());
  return {best_set, best};
}

OracleResult charikar_greedy(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("greedy: empty graph");
  std::vector<int> degree(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<char> removed(n, 0);
  long long edges_left = g.edge_count();
  long long size_left = n;
  DensityFraction best{edges_left, size_left};
  long long best_removed = 0;

  std::vector<Vertex> removal_order;
  removal_order.reserve(n);
  while (size_left > 1) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    removal_order.push_back(v);
    edges_left -= d;
    --size_left;
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({degree[u], u});
      --degree[u];
      queue.emplace(degree[u], u);
    }
    DensityFraction cur{edges_left, size_left};
    if (cur.compare(best) > 0) {
      best = cur;
      best_removed = static_cast<long long>(removal_order.size());
    }
  }

  std::vector<char> gone(n, 0);
  for (long long i = 0; i < best_removed; ++i) gone[removal_order[i]] = 1;
  VertexSet set;
  for (Vertex v = 0; v < n; ++v) {
    if (!gone[v]) set.push_back(v);
  }
  return {set, best};
}

}  // namespace dsg
