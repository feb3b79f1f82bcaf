#ifndef DSG_ORACLES_HPP
#define DSG_ORACLES_HPP

#include "dsg/graph.hpp"

namespace dsg {

struct OracleResult {
  VertexSet set;
  DensityFraction density;
  double value() const { return density.value(); }
};

// Exact maximum-density subset by subset enumeration; ties broken to the
// lexicographically smallest vertex set.
OracleResult exact_dsg_bruteforce(const Graph& g, int limit = 20);

struct WeightedOracleResult {
  VertexSet set;
  double density = 0.0;
};

WeightedOracleResult exact_weighted_bruteforce(const NodeWeightedGraph& g,
                                               int limit = 20);

struct DirectedOracleResult {
  VertexSet s;
  VertexSet t;
  long long cross_edges = 0;
  double density = 0.0;
};

// Enumerates all nonempty (S, T) pairs; exact comparisons on m^2/(|S||T|).
DirectedOracleResult exact_directed_bruteforce(const DirectedGraph& g,
                                               int limit = 5);

// Goldberg-style exact solver: binary search over an integer density lattice
// with min-cut feasibility tests. Distinct subgraph densities differ by at
// least 1/n^2, so the search terminates with the exact rational optimum.
OracleResult exact_dsg_flow(const Graph& g);

// Sequential min-degree peeling; returns the best suffix. Density is at
// least half the optimum.
OracleResult charikar_greedy(const Graph& g);

}  // namespace dsg

#endif  // DSG_ORACLES_HPP
