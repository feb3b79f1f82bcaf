#ifndef DSG_GRAPH_HPP
#define DSG_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dsg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

// Exact density as an integer fraction, so tie-breaking and oracle
// comparisons never depend on floating-point rounding.
struct DensityFraction {
  long long num = 0;  // induced edge count
  long long den = 1;  // |S| (or scaled weight/size product)

  double value() const { return static_cast<double>(num) / den; }
  // Compares *this with other by cross multiplication.
  int compare(const DensityFraction& other) const;
};

// Simple undirected graph, vertex ids 0..n-1, sorted neighbor lists.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<std::vector<Vertex>>& adjacency() const { return adj_; }
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  long long edge_count_ = 0;
};

// Undirected graph with per-vertex costs c_v >= 1.
class NodeWeightedGraph {
 public:
  NodeWeightedGraph() = default;
  NodeWeightedGraph(Graph g, std::vector<double> costs);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  double cost(Vertex v) const { return costs_.at(v); }
  const std::vector<double>& costs() const { return costs_; }
  double max_cost() const { return max_cost_; }
  double total_cost(std::span<const Vertex> s) const;

 private:
  Graph graph_;
  std::vector<double> costs_;
  double max_cost_ = 1.0;
};

// Simple directed graph, no self loops, sorted out-neighbor lists.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  static DirectedGraph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(out_.size()); }
  long long edge_count() const { return edge_count_; }
  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  const std::vector<std::vector<Vertex>>& out_adjacency() const { return out_; }
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<Vertex>> out_;
  long long edge_count_ = 0;
};

// A permutation of all vertices together with its inverse.
struct Ordering {
  std::vector<Vertex> perm;    // perm[rank] = vertex
  std::vector<int> position;   // position[vertex] = rank

  static Ordering identity(int n);
  static Ordering from_perm(std::vector<Vertex> perm);

  int size() const { return static_cast<int>(perm.size()); }
};

// Orders vertices by nonincreasing key, ties broken by ascending vertex id.
Ordering order_by_descending(std::span<const double> keys);

long long induced_edge_count(const Graph& g, std::span<const Vertex> s);

double density(const Graph& g, std::span<const Vertex> s);
DensityFraction density_fraction(const Graph& g, std::span<const Vertex> s);

double weighted_density(const NodeWeightedGraph& g, std::span<const Vertex> s);

long long cross_edge_count(const DirectedGraph& g, std::span<const Vertex> s,
                           std::span<const Vertex> t);
double directed_density(const DirectedGraph& g, std::span<const Vertex> s,
                        std::span<const Vertex> t);

// q(sigma)_v: the number of neighbors of v that precede v in sigma.
std::vector<int> peel_counts(const Graph& g, const Ordering& sigma);

struct PrefixResult {
  VertexSet set;
  DensityFraction density;
};

// The densest prefix of sigma, exact arithmetic, ties to the shorter prefix.
PrefixResult best_prefix(const Graph& g, const Ordering& sigma);

}  // namespace dsg

#endif  // DSG_GRAPH_HPP
