#ifndef DSG_GRAPH_IO_HPP
#define DSG_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsg/graph.hpp"

namespace dsg {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge-list text format: one "u v" pair per line, '#' comments, optional
// header "n=<int>". Weighted files add "w <v> <c>" lines. The directed format
// is identical with (tail head) semantics. External labels are mapped to
// dense ids at ingestion; the side table keeps the original spelling.
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;  // labels[id] = external label
};

struct LoadedWeightedGraph {
  NodeWeightedGraph graph;
  std::vector<std::string> labels;
};

struct LoadedDigraph {
  DirectedGraph graph;
  std::vector<std::string> labels;
};

LoadedGraph read_edge_list(std::istream& in);
LoadedGraph read_edge_list_file(const std::string& path);
LoadedWeightedGraph read_weighted_edge_list(std::istream& in);
LoadedWeightedGraph read_weighted_edge_list_file(const std::string& path);
LoadedDigraph read_directed_edge_list(std::istream& in);
LoadedDigraph read_directed_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>* labels = nullptr);
void write_edge_list_file(const std::string& path, const Graph& g);
void write_weighted_edge_list(std::ostream& out, const NodeWeightedGraph& g,
                              const std::vector<std::string>* labels = nullptr);
void write_directed_edge_list(std::ostream& out, const DirectedGraph& g,
                              const std::vector<std::string>* labels = nullptr);
void write_directed_edge_list_file(const std::string& path,
                                   const DirectedGraph& g);

}  // namespace dsg

#endif  // DSG_GRAPH_IO_HPP
