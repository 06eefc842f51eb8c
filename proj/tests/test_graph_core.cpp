#include <doctest.h>

#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cartfact/disjoint_sets.hpp"
#include "cartfact/edge_partition.hpp"
#include "cartfact/errors.hpp"
#include "cartfact/generators.hpp"
#include "cartfact/graph.hpp"
#include "cartfact/graph_io.hpp"
#include "cartfact/parallel.hpp"
#include "cartfact/product.hpp"
#include "cartfact/traversal.hpp"
#include "oracles.hpp"

using namespace cartfact;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("edges are normalized, deduplicated and ordered") {
  const std::vector<Edge> raw{{2, 1}, {0, 2}, {1, 2}, {0, 1}};
  const Graph g = Graph::from_edges(3, raw);
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{1, 2});
  CHECK(g.edge_between(2, 1) == EdgeId{2});
  CHECK_FALSE(Graph::from_edges(4, raw).adjacent(0, 3));
  CHECK(g.common_vertex(0, 2) == Vertex{1});
  CHECK_FALSE(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}}).common_vertex(0, 1).has_value());
  CHECK(g.neighbor_index(2, 1) == std::size_t{1});
  CHECK(g.other_end(1, 2) == 0);
}

TEST_CASE("invalid edges raise typed errors") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> far{{0, 5}};
  CHECK(code_of([&] { Graph::from_edges(2, loop); }) == ErrorCode::SelfLoop);
  CHECK(code_of([&] { Graph::from_edges(2, far); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("edge list parsing") {
  const Graph g = load_edge_list("# header\n0 1\n\n1 2  # trailing\n2 1\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(code_of([] { load_edge_list("0 x\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { load_edge_list("0 1 2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { load_edge_list("3 3\n"); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { load_edge_list("# nothing\n"); }) == ErrorCode::EmptyGraph);
  CHECK(code_of([] { load_edge_list_file("/nonexistent/graph.el"); }) == ErrorCode::ParseError);

  std::ostringstream out;
  write_edge_list(out, make_hypercube(3));
  CHECK(load_edge_list(out.str()) == make_hypercube(3));
}

TEST_CASE("vertex lists and DOT output") {
  std::istringstream in("3 1 # c\n2\n");
  CHECK(load_vertex_list(in) == std::vector<Vertex>{3, 1, 2});
  const VertexSubset w(5, {3, 1, 3});
  CHECK(w.size() == 2);
  CHECK(w.contains(3));
  CHECK_FALSE(w.contains(0));

  std::ostringstream dot;
  const std::vector<std::uint32_t> cls{0, 1};
  DotStyle style;
  style.edge_class = cls;
  write_dot(dot, make_path(3), style);
  CHECK(dot.str().find("graph G") != std::string::npos);
  CHECK(dot.str().find("color=1") != std::string::npos);
  const std::vector<std::uint32_t> c{1, 0, 2};
  CHECK(format_coordinates(c) == "(1,0,2)");
}

TEST_CASE("product of a path and an edge") {
  const Graph factors[] = {make_path(2), make_path(3)};
  const ProductGraph p = cartesian_product(factors);
  CHECK(p.graph.vertex_count() == 6);
  CHECK(p.graph.edge_count() == 7);
  CHECK(p.colors.class_count() == 2);
  for (Vertex v = 0; v < 6; ++v) CHECK(p.codec.encode(p.coordinates[v]) == v);
  for (EdgeId e = 0; e < p.graph.edge_count(); ++e) {
    const auto& a = p.coordinates[p.graph.edge(e).u];
    const auto& b = p.coordinates[p.graph.edge(e).v];
    std::size_t diff = 0;
    for (std::size_t i = 0; i < 2; ++i) diff += a[i] != b[i];
    CHECK(diff == 1);
    CHECK(a[p.color_of_edge[e]] != b[p.color_of_edge[e]]);
  }
  CHECK(code_of([] { cartesian_product(std::span<const Graph>{}); }) == ErrorCode::EmptyFactor);
}

TEST_CASE("product sizes") {
  const Graph q4 = make_hypercube(4);
  CHECK(q4.vertex_count() == 16);
  CHECK(q4.edge_count() == 32);
  const Graph f[] = {make_star(3), make_star(2), make_cycle(5)};
  const ProductGraph p = cartesian_product(f);
  CHECK(p.graph.vertex_count() == 4 * 3 * 5);
  CHECK(p.graph.edge_count() == 3 * 15 + 2 * 20 + 5 * 12);
}

TEST_CASE("BFS distances match Floyd-Warshall") {
  for (const Graph& g : oracle::random_corpus(40, 11)) {
    const auto fw = oracle::floyd_warshall(g);
    CHECK(all_pairs_distances(g) == fw);
    CHECK(is_connected(g));
  }
}

TEST_CASE("components, neighborhoods and subgraphs") {
  const Graph g = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}});
  const Components c = connected_components(g);
  CHECK(c.count == 3);
  CHECK(c.label[2] == c.label[0]);
  CHECK(c.label[5] != c.label[3]);
  CHECK_FALSE(is_connected(g));

  const Graph p = make_path(7);
  const VertexSubset ball = neighborhood(p, 3, 2);
  CHECK(std::vector<Vertex>(ball.members().begin(), ball.members().end()) == std::vector<Vertex>{1, 2, 3, 4, 5});
  const Subgraph s = induced_subgraph(p, ball);
  CHECK(s.graph.edge_count() == 4);
  CHECK(code_of([&] { induced_subgraph(p, VertexSubset(7, {})); }) == ErrorCode::EmptySubset);

  const Graph q3 = make_hypercube(3);
  std::vector<EdgeId> all(q3.edge_count());
  std::iota(all.begin(), all.end(), 0);
  CHECK(edge_subgraph(q3, all).graph == q3);
}

TEST_CASE("generators") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Graph t = random_tree(9, rng);
    CHECK(t.edge_count() == 8);
    CHECK(is_connected(t));
  }
  CHECK(make_star(4).degree(0) == 4);
  CHECK(make_cycle(5).edge_count() == 5);
  CHECK(make_complete(5).edge_count() == 10);
  CHECK(make_complete_bipartite(2, 3).edge_count() == 6);
  const std::vector<Vertex> perm{2, 0, 1};
  CHECK(relabel(make_path(3), perm).adjacent(2, 0));
}

TEST_CASE("edge partitions are canonical") {
  const std::vector<std::uint32_t> raw{7, 3, 7, 9};
  const EdgePartition p = EdgePartition::from_labels(raw);
  CHECK(p.class_count() == 3);
  CHECK(std::vector<std::uint32_t>(p.labels().begin(), p.labels().end()) == std::vector<std::uint32_t>{0, 1, 0, 2});
  const std::vector<std::uint32_t> renamed{1, 0, 1, 5};
  CHECK(EdgePartition::from_labels(renamed) == p);
  const EdgePartition m = p.merged(1, 2);
  CHECK(m.class_count() == 2);
  CHECK(p.refines(m));
  CHECK_FALSE(m.refines(p));
  CHECK(EdgePartition::singletons(3).refines(EdgePartition::single_class(3)));
  CHECK(p.members(0).size() == 2);
}

TEST_CASE("disjoint sets with rollback") {
  RollbackDisjointSets s;
  for (int i = 0; i < 5; ++i) s.add();
  s.unite(0, 1);
  const auto mark = s.checkpoint();
  s.unite(1, 2);
  s.add();
  s.unite(5, 3);
  CHECK(s.set_count() == 3);
  s.rollback(mark);
  CHECK(s.element_count() == 5);
  CHECK(s.set_count() == 4);
  CHECK(s.find(0) == s.find(1));
  CHECK(s.find(2) != s.find(1));
}

TEST_CASE("parallel_for runs every index once") {
  std::vector<std::atomic<int>> hits(200);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}
