#include <sstream>

#include "doctest.h"
#include "dsg/generators.hpp"
#include "dsg/graph.hpp"
#include "dsg/graph_io.hpp"
#include "dsg/oracles.hpp"
#include "test_util.hpp"

using namespace dsg;
using namespace dsg_test;

TEST_CASE("density on fixed graphs") {
  Graph g = k4();
  VertexSet all{0, 1, 2, 3};
  CHECK(density(g, all) == doctest::Approx(1.5));
  auto frac = density_fraction(g, all);
  CHECK(frac.num == 6);
  CHECK(frac.den == 4);

  Graph tri = triangle();
  VertexSet pair{0, 1};
  CHECK(density(tri, pair) == doctest::Approx(0.5));

  Graph bridge = two_triangle_bridge();
  VertexSet six{0, 1, 2, 3, 4, 5};
  CHECK(density(bridge, six) == doctest::Approx(7.0 / 6.0));
  // Brute force confirms the full vertex set is also the optimum.
  auto opt = exact_dsg_bruteforce(bridge);
  CHECK(opt.density.num == 7);
  CHECK(opt.density.den == 6);
}

TEST_CASE("density rejects the empty set") {
  Graph g = triangle();
  CHECK_THROWS_WITH_AS(density(g, VertexSet{}),
                       doctest::Contains("empty subset"),
                       std::invalid_argument);
}

TEST_CASE("weighted density") {
  Graph tri = triangle();
  NodeWeightedGraph w2(tri, {2, 2, 2});
  VertexSet all{0, 1, 2};
  CHECK(weighted_density(w2, all) == doctest::Approx(0.5));

  NodeWeightedGraph w1(tri, {1, 1, 1});
  CHECK(weighted_density(w1, all) == doctest::Approx(density(tri, all)));

  NodeWeightedGraph path(path3(), {1, 2, 1});
  VertexSet ab{0, 1};
  CHECK(weighted_density(path, ab) == doctest::Approx(1.0 / 3.0));

  CHECK_THROWS_AS(weighted_density(w1, VertexSet{}), std::invalid_argument);
  CHECK_THROWS_AS(NodeWeightedGraph(tri, {0.5, 1, 1}), std::invalid_argument);
}

TEST_CASE("directed density") {
  std::vector<Edge> e{{0, 1}, {0, 2}};
  DirectedGraph g = DirectedGraph::from_edges(3, e);
  VertexSet s{0}, t{1, 2};
  CHECK(directed_density(g, s, t) == doctest::Approx(std::sqrt(2.0)));
  auto opt = exact_directed_bruteforce(g);
  CHECK(opt.density == doctest::Approx(std::sqrt(2.0)));

  std::vector<Edge> one{{0, 1}};
  DirectedGraph g1 = DirectedGraph::from_edges(2, one);
  VertexSet a{0}, b{1};
  CHECK(directed_density(g1, a, b) == doctest::Approx(1.0));
  CHECK(directed_density(g1, b, a) == doctest::Approx(0.0));
  CHECK_THROWS_AS(directed_density(g1, VertexSet{}, b),
                  std::invalid_argument);
}

TEST_CASE("peel counts on fixed graphs") {
  Graph p = path3();
  auto q = peel_counts(p, Ordering::identity(3));
  CHECK(q == std::vector<int>{0, 1, 1});

  Graph tri = triangle();
  for (auto& perm : all_permutations(3)) {
    auto qt = peel_counts(tri, Ordering::from_perm(perm));
    CHECK(qt[0] + qt[1] + qt[2] == 3);
  }

  Graph st = star(2);  // leaves 0,1, center 2
  auto qs = peel_counts(st, Ordering::identity(3));
  CHECK(qs == std::vector<int>{0, 0, 2});
}

TEST_CASE("peel count conservation and prefix sums, exhaustive n=6") {
  for (std::uint64_t seed : {11, 12, 13}) {
    Graph g = random_graph(6, 0.5, seed);
    for (auto& perm : all_permutations(6)) {
      Ordering sigma = Ordering::from_perm(perm);
      auto q = peel_counts(g, sigma);
      auto ref = reference_peel_counts(g, sigma);
      CHECK(q == ref);
      long long total = 0;
      for (int len = 1; len <= 6; ++len) {
        total += q[sigma.perm[len - 1]];
        VertexSet prefix(sigma.perm.begin(), sigma.perm.begin() + len);
        CHECK(total == induced_edge_count(g, prefix));
      }
      CHECK(total == g.edge_count());
    }
  }
}

TEST_CASE("one-edge sensitivity of peel counts") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 0.45, seed);
    Ordering sigma = random_ordering(n, seed + 100);
    auto base = peel_counts(g, sigma);
    auto edges = g.edges();
    std::vector<char> present(n * n, 0);
    for (auto [u, v] : edges) present[u * n + v] = present[v * n + u] = 1;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        std::vector<Edge> toggled = edges;
        if (present[u * n + v]) {
          std::erase_if(toggled, [&](Edge e) {
            return (e.first == u && e.second == v) ||
                   (e.first == v && e.second == u);
          });
        } else {
          toggled.push_back({u, v});
        }
        auto q2 = peel_counts(Graph::from_edges(n, toggled), sigma);
        int changed = 0;
        for (int w = 0; w < n; ++w) {
          if (q2[w] != base[w]) {
            ++changed;
            CHECK(std::abs(q2[w] - base[w]) == 1);
            CHECK((w == u || w == v));  // only the later endpoint moves
          }
        }
        CHECK(changed == 1);
      }
    }
  }
}

TEST_CASE("weight-1 density equals unweighted on random pairs") {
  RngRoot root(77);
  auto s = root.stream({1});
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 1000; ++seed) {
    Graph g = random_graph(3 + seed % 8, 0.4, seed + 500);
    NodeWeightedGraph w(g, unit_costs(g.vertex_count()));
    VertexSet subset;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (s.uniform() < 0.5) subset.push_back(v);
    }
    if (subset.empty()) continue;
    CHECK(weighted_density(w, subset) == density(g, subset));
    ++checked;
  }
}

TEST_CASE("best prefix on fixed graphs") {
  std::vector<Edge> one{{0, 1}};
  Graph g = Graph::from_edges(2, one);
  auto r = best_prefix(g, Ordering::identity(2));
  CHECK(r.set == VertexSet{0, 1});
  CHECK(r.density.value() == doctest::Approx(0.5));

  Graph empty = Graph::from_edges(3, {});
  auto re = best_prefix(empty, Ordering::identity(3));
  CHECK(re.set == VertexSet{0});  // ties go to the shorter prefix
  CHECK(re.density.num == 0);

  // Some ordering of the bridge graph realizes the optimum 7/6 as a prefix,
  // and none beats it.
  Graph bridge = two_triangle_bridge();
  bool hit = false;
  for (auto& perm : all_permutations(6)) {
    auto rb = best_prefix(bridge, Ordering::from_perm(perm));
    DensityFraction best{7, 6};
    CHECK(rb.density.compare(best) <= 0);
    if (rb.density.compare(best) == 0) hit = true;
  }
  CHECK(hit);
}

TEST_CASE("best prefix never beats the brute-force optimum") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 0.5, seed + 900);
    auto opt = exact_dsg_bruteforce(g);
    for (int k = 0; k < 10; ++k) {
      auto r = best_prefix(g, random_ordering(n, seed * 100 + k));
      CHECK(r.density.compare(opt.density) <= 0);
    }
  }
}

TEST_CASE("generators") {
  Graph empty = gnp(5, 0.0, 3);
  CHECK(empty.edge_count() == 0);
  Graph full = gnp(5, 1.0, 3);
  CHECK(full.edge_count() == 10);

  auto planted = planted_dense(200, 30, 0.9, 0.01, 7);
  CHECK(planted.planted.size() == 30);
  double block = density(planted.graph, planted.planted);
  auto exact = exact_dsg_flow(planted.graph);
  CHECK(exact.value() >= block - 1e-12);

  auto planted2 = planted_dense(200, 30, 0.9, 0.01, 7);
  CHECK(planted.graph.edges() == planted2.graph.edges());
  CHECK(planted.planted == planted2.planted);

  CHECK_THROWS_AS(gnp(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(planted_dense(5, 9, 0.5, 0.1, 1), std::invalid_argument);
}

TEST_CASE("graph construction rejects malformed input") {
  std::vector<Edge> self{{0, 0}};
  CHECK_THROWS_WITH_AS(Graph::from_edges(2, self),
                       doctest::Contains("self-loops"),
                       std::invalid_argument);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_WITH_AS(Graph::from_edges(2, dup),
                       doctest::Contains("parallel"), std::invalid_argument);
  CHECK_THROWS_AS(Ordering::from_perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Ordering::from_perm({0, 2}), std::invalid_argument);
}

TEST_CASE("edge list round trips are byte stable") {
  Graph g = random_graph(12, 0.3, 42);
  std::ostringstream first;
  write_edge_list(first, g);
  std::istringstream back(first.str());
  auto loaded = read_edge_list(back);
  CHECK(loaded.graph.edges() == g.edges());
  std::ostringstream second;
  write_edge_list(second, loaded.graph);
  CHECK(first.str() == second.str());
}

TEST_CASE("edge list parsing: comments, headers, labels") {
  std::istringstream in("# comment\nn=4\n0 1 # trailing\n2 3\n");
  auto loaded = read_edge_list(in);
  CHECK(loaded.graph.vertex_count() == 4);
  CHECK(loaded.graph.edge_count() == 2);

  // Without a header, labels map densely in order of appearance.
  std::istringstream labels("alpha beta\nbeta gamma\n");
  auto mapped = read_edge_list(labels);
  CHECK(mapped.graph.vertex_count() == 3);
  CHECK(mapped.labels == std::vector<std::string>{"alpha", "beta", "gamma"});

  std::istringstream bad("n=2\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(bad), ParseError);
  std::istringstream loop("n=2\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), ParseError);
}

TEST_CASE("weighted and directed formats round trip") {
  Graph g = random_graph(8, 0.4, 9);
  std::vector<double> costs = random_costs(8, 1.0, 5.0, 11);
  NodeWeightedGraph w(g, costs);
  std::ostringstream ws;
  write_weighted_edge_list(ws, w);
  std::istringstream win(ws.str());
  auto wl = read_weighted_edge_list(win);
  CHECK(wl.graph.graph().edges() == g.edges());
  for (int v = 0; v < 8; ++v)
    CHECK(wl.graph.cost(v) == doctest::Approx(costs[v]));

  DirectedGraph d = random_digraph(7, 0.3, 13);
  std::ostringstream ds;
  write_directed_edge_list(ds, d);
  std::istringstream din(ds.str());
  auto dl = read_directed_edge_list(din);
  CHECK(dl.graph.edges() == d.edges());
}
