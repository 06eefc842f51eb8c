#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cartfact/approx_driver.hpp"
#include "cartfact/coordinatizer.hpp"
#include "cartfact/covering.hpp"
#include "cartfact/errors.hpp"
#include "cartfact/generators.hpp"
#include "cartfact/product.hpp"
#include "cartfact/traversal.hpp"
#include "oracles.hpp"

using namespace cartfact;

namespace {

CoveringResult cover_all(const Graph& g) { return cover(g, VertexSubset::all(g.vertex_count())); }

// BFS component of x through edges of class c, recomputed from scratch.
std::set<Vertex> class_component(const Graph& g, const EdgePartition& p, std::uint32_t c, Vertex x) {
  std::set<Vertex> seen{x};
  std::deque<Vertex> q{x};
  while (!q.empty()) {
    const Vertex y = q.front();
    q.pop_front();
    for (const Incidence& i : g.incidences(y))
      if (p.class_of(i.edge) == c && seen.insert(i.neighbor).second) q.push_back(i.neighbor);
  }
  return seen;
}

bool components_meet_once(const Graph& g, const EdgePartition& p) {
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (std::uint32_t i = 0; i < p.class_count(); ++i)
      for (std::uint32_t j = i + 1; j < p.class_count(); ++j) {
        const auto a = class_component(g, p, i, x);
        const auto b = class_component(g, p, j, x);
        std::size_t common = 0;
        for (Vertex y : a) common += b.contains(y);
        if (common > 1) return false;
      }
  return true;
}

Graph without_edge(const Graph& g, EdgeId drop) {
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (e != drop) edges.push_back(g.edge(e));
  return Graph::from_edges(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("C4 gets the four 0/1 vectors") {
  const CoordinateAssignment ca = assign_coordinates(cover_all(make_cycle(4)));
  std::set<CoordinateVector> got;
  for (Vertex x = 0; x < 4; ++x) got.insert(ca.coordinates(x));
  CHECK(got == std::set<CoordinateVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(ca.deleted_nothing());
}

TEST_CASE("P2 x P3 from a corner matches the product coordinates") {
  const Graph f[] = {make_path(2), make_path(3)};
  const ProductGraph pg = cartesian_product(f);
  CoordinatizeOptions opts;
  opts.root = 0;
  const CoordinateAssignment ca = assign_coordinates(cover_all(pg.graph), opts);
  CHECK(ca.deleted_nothing());
  REQUIRE(ca.class_count() == 2);
  // Some position permutation plus per-position bijections maps one to the other.
  bool matched = false;
  for (int swap = 0; swap < 2 && !matched; ++swap) {
    bool ok = true;
    for (std::size_t pos = 0; pos < 2; ++pos) {
      std::map<std::uint32_t, std::uint32_t> fwd, back;
      for (Vertex x = 0; x < 6; ++x) {
        const std::uint32_t a = ca.coordinates(x)[swap ? 1 - pos : pos];
        const std::uint32_t b = pg.coordinates[x][pos];
        if (fwd.emplace(a, b).first->second != b) ok = false;
        if (back.emplace(b, a).first->second != a) ok = false;
      }
    }
    matched = ok;
  }
  CHECK(matched);
}

TEST_CASE("merging: exact tree products keep their classes") {
  Rng rng(51);
  for (int i = 0; i < 15; ++i) {
    const Graph f[] = {random_tree(5, rng), random_tree(4, rng)};
    const CoveringResult c = cover_all(cartesian_product(f).graph);
    const auto [merged, idx] = merge_until_consistent(c);
    CHECK(merged == c.partition);
    CHECK(merged.class_count() == 2);
    CHECK(idx.class_count == 2);
  }
  const Graph p = make_path(5);
  const auto [one, idx] = merge_until_consistent(p, EdgePartition::single_class(p.edge_count()));
  CHECK(one.class_count() == 1);
}

TEST_CASE("merging: Q3 minus an edge, W = degree-3 vertices") {
  const Graph q3 = make_hypercube(3);
  for (EdgeId drop = 0; drop < q3.edge_count(); ++drop) {
    const Graph g = without_edge(q3, drop);
    std::vector<Vertex> w;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == 3) w.push_back(v);
    const CoveringResult c = cover(g, VertexSubset(g.vertex_count(), w));
    const auto [merged, idx] = merge_until_consistent(c);
    CHECK(merged.class_count() >= 1);
    CHECK(c.partition.refines(merged));
    CHECK(components_meet_once(c.union_graph.graph, merged));
  }
}

TEST_CASE("merging reaches a state without overlapping components") {
  for (const Graph& g : oracle::random_corpus(60, 52)) {
    const CoveringResult c = cover_all(g);
    const auto [merged, idx] = merge_until_consistent(c);
    CHECK(c.partition.refines(merged));
    CHECK(components_meet_once(c.union_graph.graph, merged));
    for (std::uint32_t k = 0; k < merged.class_count(); ++k)
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        const auto m = idx.members(k, x);
        CHECK(std::set<Vertex>(m.begin(), m.end()) == class_component(c.union_graph.graph, merged, k, x));
      }
  }
}

TEST_CASE("consistency check contracts") {
  // Path 0-1-2 with two classes.
  const Graph p = make_path(3);
  const std::vector<std::uint32_t> labels{0, 1};
  const EdgePartition cls = EdgePartition::from_labels(labels);

  SUBCASE("duplicate vector removes the vertex") {
    for (bool literal : {false, true}) {
      CoordinateAssignment ca(p, cls, 0);
      ca.set_literal_duplicate_scan(literal);
      ca.assign(0, {0, 0});
      ca.assign(1, {1, 0});
      ca.assign(2, {0, 0});
      const ConsistencyReport r = consistency_check(ca, 2);
      CHECK(r.vertex_removed);
      CHECK_FALSE(ca.vertex_alive(2));
      REQUIRE(ca.deletions().size() == 1);
      CHECK(ca.deletions()[0].reason == DeletionReason::DuplicateCoordinates);
    }
  }
  SUBCASE("edge differing in two positions is removed") {
    CoordinateAssignment ca(p, cls, 0);
    ca.assign(0, {0, 0});
    ca.assign(1, {1, 0});
    ca.assign(2, {2, 1});
    const ConsistencyReport r = consistency_check(ca, 2);
    CHECK_FALSE(r.vertex_removed);
    REQUIRE(r.removed_edges.size() == 1);
    CHECK(ca.deletions()[0].reason == DeletionReason::InconsistentEdge);
    CHECK_FALSE(ca.edge_alive(1));
  }
  SUBCASE("edge with an unchanged class position is removed") {
    CoordinateAssignment ca(p, cls, 0);
    ca.assign(0, {0, 0});
    ca.assign(1, {0, 1});  // edge 0 is class 0 but position 0 does not change
    CHECK(consistency_check(ca, 1).removed_edges == std::vector<EdgeId>{0});
  }
  SUBCASE("consistent vertex yields an empty report") {
    CoordinateAssignment ca(p, cls, 0);
    ca.assign(0, {0, 0});
    ca.assign(1, {1, 0});
    ca.assign(2, {1, 1});
    CHECK(consistency_check(ca, 2).empty());
    CHECK(consistency_check(ca, 1).empty());
    CHECK(coordinates_consistent(ca));
  }
  SUBCASE("bad vector length") { CHECK_THROWS_AS(CoordinateAssignment(p, cls, 0).assign(0, {0}), Error); }
}

TEST_CASE("root selection") {
  const Graph g = make_path(4);
  const CoveringResult c = cover(g, VertexSubset(4, {0, 1}));
  CoordinatizeOptions opts;
  opts.root = 3;
  try {
    assign_coordinates(c, opts);
    FAIL("expected RootNotInW");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RootNotInW);
  }
  // Grid corner has two classes but so does every vertex; smallest id wins.
  const Graph f[] = {make_path(2), make_path(3)};
  CHECK(default_root(cover_all(cartesian_product(f).graph)) == 0);
  // In Q3 minus an edge, the two endpoints of the missing edge have fewer classes.
  const Graph q3 = make_hypercube(3);
  const Graph broken = without_edge(q3, *q3.edge_between(0, 1));
  const CoveringResult cb = cover_all(broken);
  const Vertex r = default_root(cb);
  for (Vertex v = 0; v < 8; ++v) CHECK(cb.psp_of(v).class_count() <= cb.psp_of(r).class_count());
}

TEST_CASE("lossless on exact products of stars and trees") {
  Rng rng(53);
  for (int i = 0; i < 25; ++i) {
    const Graph f[] = {oracle::random_small_factor(rng), oracle::random_small_factor(rng)};
    const ProductGraph pg = cartesian_product(f);
    const CoveringResult c = cover_all(pg.graph);
    const CoordinateAssignment ca = assign_coordinates(c);
    CHECK(ca.deleted_nothing());
    CHECK(ca.surviving().h.graph.vertex_count() == pg.graph.vertex_count());
    CHECK(coordinates_consistent(ca));
  }
}

TEST_CASE("invariants and determinism on perturbed inputs") {
  Rng rng(54);
  for (int i = 0; i < 30; ++i) {
    const Graph f[] = {oracle::random_small_factor(rng), oracle::random_small_factor(rng)};
    const ProductGraph pg = cartesian_product(f);
    const Perturbation pert = perturb(pg.graph, {1, 1, static_cast<std::uint64_t>(i), 1000});
    const Graph& g = pert.graph;
    const CoveringResult c = cover_all(g);

    // Every vertex of U is within distance 2 of W.
    for (Vertex u : c.union_graph.parent_vertex) {
      const auto d = bfs_distances(g, u);
      std::uint32_t best = kUnreachable;
      for (Vertex w : c.subset.members()) best = std::min(best, d[w]);
      CHECK(best <= 2);
    }

    const CoordinateAssignment a = assign_coordinates(c);
    const CoordinateAssignment b = assign_coordinates(c);
    CoordinatizeOptions literal;
    literal.literal_duplicate_scan = true;
    const CoordinateAssignment l = assign_coordinates(c, literal);
    CHECK(coordinates_consistent(a));
    CHECK(coordinates_consistent(a.surviving()));
    CHECK(c.partition.refines(a.classes()));
    for (const CoordinateAssignment* other : {&b, &l}) {
      REQUIRE(other->deletions().size() == a.deletions().size());
      for (Vertex x = 0; x < a.graph().vertex_count(); ++x) {
        CHECK(a.vertex_alive(x) == other->vertex_alive(x));
        if (a.has_coordinates(x)) CHECK(a.coordinates(x) == other->coordinates(x));
      }
    }
    // Surviving edges keep their (merged) class.
    const CoordinatizedGraph h = a.surviving();
    for (EdgeId e = 0; e < h.h.graph.edge_count(); ++e) CHECK(h.edge_class[e] == a.classes().class_of(h.h.parent_edge[e]));
  }
}

TEST_CASE("deletion reasons have names") {
  CHECK(to_string(DeletionReason::InconsistentEdge) == "InconsistentEdge");
  CHECK(to_string(DeletionReason::NoCoordinatizedNeighbor) == "NoCoordinatizedNeighbor");
}
