#ifndef DSG_GENERATORS_HPP
#define DSG_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "dsg/graph.hpp"

namespace dsg {

// Erdos-Renyi G(n, p); deterministic given the seed.
Graph gnp(int n, double p, std::uint64_t seed);

struct PlantedGraph {
  Graph graph;
  VertexSet planted;  // the embedded dense block
};

// G(n, p_out) background with a G(k, p_in) block on a random k-subset.
// The block's own density lower-bounds the optimum by construction.
PlantedGraph planted_dense(int n, int k, double p_in, double p_out,
                           std::uint64_t seed);

std::vector<double> unit_costs(int n);
// Costs uniform in [lo, hi], lo >= 1.
std::vector<double> random_costs(int n, double lo, double hi,
                                 std::uint64_t seed);

DirectedGraph random_digraph(int n, double p, std::uint64_t seed);

struct PlantedDigraph {
  DirectedGraph graph;
  VertexSet s;
  VertexSet t;
};

// Dense directed block from s_set to t_set over a sparse background.
PlantedDigraph planted_directed(int n, int s_size, int t_size, double p_in,
                                double p_out, std::uint64_t seed);

}  // namespace dsg

#endif  // DSG_GENERATORS_HPP
