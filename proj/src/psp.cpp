#include "cartfact/psp.hpp"

#include <algorithm>
#include <memory>
#include <ostream>
#include <string>

#include "cartfact/errors.hpp"
#include "cartfact/generators.hpp"
#include "cartfact/graph_io.hpp"
#include "cartfact/traversal.hpp"

namespace cartfact {

bool EdgeRelation::contains(EdgeId e, EdgeId f) const {
  if (e == f) return e < domain;
  if (e > f) std::swap(e, f);
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{e, f});
}

void EdgeRelation::normalize() {
  for (auto& [e, f] : pairs)
    if (e > f) std::swap(e, f);
  std::erase_if(pairs, [](const auto& p) { return p.first == p.second; });
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

EdgeRelation delta_oracle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<char> adj(n * n, 0);
  for (const Edge& e : g.edges()) adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
  auto A = [&](Vertex a, Vertex b) { return adj[a * n + b] != 0; };
  auto closed_meet = [&](Vertex a, Vertex b) {
    std::size_t c = 0;
    for (Vertex z = 0; z < n; ++z)
      if ((z == a || A(z, a)) && (z == b || A(z, b))) ++c;
    return c;
  };

  EdgeRelation rel;
  rel.domain = m;
  for (EdgeId i = 0; i < m; ++i) {
    const Edge a = g.edge(i);
    for (EdgeId j = i + 1; j < m; ++j) {
      const Edge b = g.edge(j);
      bool related = false;
      Vertex v = n, u = 0, w = 0;
      if (a.u == b.u) v = a.u, u = a.v, w = b.v;
      else if (a.u == b.v) v = a.u, u = a.v, w = b.u;
      else if (a.v == b.u) v = a.v, u = a.u, w = b.v;
      else if (a.v == b.v) v = a.v, u = a.u, w = b.u;

      if (v != n) {
        std::size_t count = 0;
        Vertex top = 0;
        for (Vertex x = 0; x < n; ++x)
          if (x != v && A(x, u) && A(x, w)) ++count, top = x;
        const bool exempt = count == 1 && !A(v, top) && !A(u, w) && closed_meet(top, v) == 2;
        related = !exempt;
      } else {
        // a = (p,q), b = (r,s): a 4-cycle p-q-s-r or p-q-r-s
        const Vertex p = a.u, q = a.v, r = b.u, s = b.v;
        const bool first = A(p, r) && A(q, s) && !A(p, s) && !A(q, r);
        const bool second = A(p, s) && A(q, r) && !A(p, r) && !A(q, s);
        related = first || second;
      }
      if (related) rel.pairs.emplace_back(i, j);
    }
  }
  return rel;
}

EdgePartition transitive_closure(std::size_t domain, std::span<const std::pair<EdgeId, EdgeId>> pairs) {
  DisjointSets sets(domain);
  for (auto [e, f] : pairs) sets.unite(e, f);
  return EdgePartition::from_sets(sets);
}

EdgePartition transitive_closure(const EdgeRelation& relation) {
  return transitive_closure(relation.domain, relation.pairs);
}

namespace {

std::size_t position(std::span<const EdgeId> sorted, EdgeId e) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), e) - sorted.begin());
}

bool sorted_contains(std::span<const EdgeId> sorted, EdgeId e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

/// Calls emit(e, f) for every delta pair with at least one edge at v.
/// Pairs may repeat.
template <class Emit>
void for_each_local_pair(const Graph& g, const SquareIndex& index, Vertex v, Emit&& emit) {
  auto inc = g.incidences(v);
  const std::size_t d = inc.size();
  for (std::size_t a = 0; a < d; ++a) {
    const Vertex u = inc[a].neighbor;
    for (std::size_t b = a + 1; b < d; ++b) {
      const Vertex w = inc[b].neighbor;
      const PairSquareSummary& s = index.summary_at(v, a, b);
      if (!s.unique_chordless_with_unique_top()) emit(inc[a].edge, inc[b].edge);
      if (s.count == 0) continue;
      auto opposite = [&](Vertex x) {
        if (g.adjacent(v, x) || g.adjacent(u, w)) return;
        emit(inc[a].edge, *g.edge_between(w, x));
        emit(inc[b].edge, *g.edge_between(u, x));
      };
      if (s.count == 1) {
        opposite(s.top);
        continue;
      }
      auto nu = g.incidences(u);
      auto nw = g.incidences(w);
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nw.size()) {
        if (nu[i].neighbor < nw[j].neighbor) {
          ++i;
        } else if (nw[j].neighbor < nu[i].neighbor) {
          ++j;
        } else {
          if (nu[i].neighbor != v) opposite(nu[i].neighbor);
          ++i;
          ++j;
        }
      }
    }
    // Incident pairs meeting at the far end u.
    auto nu = g.incidences(u);
    const std::size_t back = *g.neighbor_index(u, v);
    for (std::size_t c = 0; c < nu.size(); ++c) {
      if (c == back) continue;
      if (!index.summary_at(u, back, c).unique_chordless_with_unique_top()) emit(inc[a].edge, nu[c].edge);
    }
  }
}

}  // namespace

LocalRelation local_relation(const Graph& g, const SquareIndex& index, Vertex v) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "vertex out of range");
  LocalRelation out;
  out.center = v;
  out.pairs.domain = g.edge_count();
  for_each_local_pair(g, index, v, [&](EdgeId e, EdgeId f) { out.pairs.pairs.emplace_back(e, f); });
  out.pairs.normalize();
  out.closure = transitive_closure(out.pairs);
  return out;
}

PartialStarProduct build_psp(const Graph& g, const SquareIndex& index, Vertex v) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "vertex out of range");
  PartialStarProduct psp;
  psp.center = v;
  auto inc = g.incidences(v);

  // Every local pair lives on edges incident to N[v].
  std::vector<EdgeId> domain;
  for (const Incidence& i : inc) {
    psp.primal_edges.push_back(i.edge);
    psp.primal_vertices.push_back(i.neighbor);
    for (const Incidence& j : g.incidences(i.neighbor)) domain.push_back(j.edge);
  }
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  std::sort(psp.primal_edges.begin(), psp.primal_edges.end());

  DisjointSets sets(domain.size());
  for_each_local_pair(g, index, v,
                      [&](EdgeId e, EdgeId f) { sets.unite(position(domain, e), position(domain, f)); });

  for (std::size_t a = 0; a < inc.size(); ++a)
    for (std::size_t b = a + 1; b < inc.size(); ++b) {
      if (sets.same(position(domain, inc[a].edge), position(domain, inc[b].edge))) continue;
      // Unrelated primal edges span exactly one chordless square.
      const Vertex x = index.summary_at(v, a, b).top;
      psp.nonprimal_edges.push_back(*g.edge_between(inc[a].neighbor, x));
      psp.nonprimal_edges.push_back(*g.edge_between(inc[b].neighbor, x));
    }
  std::sort(psp.nonprimal_edges.begin(), psp.nonprimal_edges.end());
  psp.nonprimal_edges.erase(std::unique(psp.nonprimal_edges.begin(), psp.nonprimal_edges.end()),
                            psp.nonprimal_edges.end());

  std::merge(psp.primal_edges.begin(), psp.primal_edges.end(), psp.nonprimal_edges.begin(),
             psp.nonprimal_edges.end(), std::back_inserter(psp.edges));
  std::vector<std::uint32_t> raw;
  raw.reserve(psp.edges.size());
  for (EdgeId e : psp.edges) {
    raw.push_back(static_cast<std::uint32_t>(sets.find(position(domain, e))));
    psp.vertices.push_back(g.edge(e).u);
    psp.vertices.push_back(g.edge(e).v);
  }
  if (inc.empty()) psp.vertices.push_back(v);
  std::sort(psp.vertices.begin(), psp.vertices.end());
  psp.vertices.erase(std::unique(psp.vertices.begin(), psp.vertices.end()), psp.vertices.end());
  psp.classes = EdgePartition::from_labels(raw);
  return psp;
}

PartialStarProduct build_psp(const Graph& g, Vertex v) {
  SquareIndex index(g);
  return build_psp(g, index, v);
}

std::uint32_t PartialStarProduct::class_of(EdgeId e) const {
  if (!contains_edge(e)) throw Error(ErrorCode::InvalidArgument, "edge not in partial star product");
  return classes.class_of(position(edges, e));
}

bool PartialStarProduct::contains_edge(EdgeId e) const { return sorted_contains(edges, e); }
bool PartialStarProduct::is_primal(EdgeId e) const { return sorted_contains(primal_edges, e); }

Subgraph psp_subgraph(const Graph& g, const PartialStarProduct& psp) {
  if (psp.edges.empty()) {
    Subgraph s;
    s.graph = Graph(1);
    s.parent_vertex = {psp.center};
    return s;
  }
  return edge_subgraph(g, psp.edges);
}

std::vector<StarFactor> star_factors(const PartialStarProduct& psp) {
  std::vector<StarFactor> stars(psp.class_count());
  for (std::uint32_t c = 0; c < stars.size(); ++c) {
    stars[c].index = c;
    stars[c].center = psp.center;
  }
  for (std::size_t i = 0; i < psp.primal_edges.size(); ++i) {
    const EdgeId e = psp.primal_edges[i];
    StarFactor& s = stars[psp.class_of(e)];
    s.edges.push_back(e);
    s.leaves.push_back(psp.primal_vertices[i]);
  }
  return stars;
}

Graph star_graph(const StarFactor& star) { return make_star(star.leaves.size()); }

IsometryReport verify_psp_isometric(const Graph& g, const PartialStarProduct& psp,
                                    std::span<const StarFactor> stars,
                                    std::size_t max_product_vertices) {
  std::size_t total = 1;
  for (const StarFactor& s : stars) {
    total *= s.leaves.size() + 1;
    if (total > max_product_vertices) throw Error(ErrorCode::TooLarge, "star product too large");
  }
  std::vector<Graph> factors;
  for (const StarFactor& s : stars) factors.push_back(star_graph(s));

  IsometryReport report;
  report.product = cartesian_product(factors);
  const ProductGraph& h = report.product;
  const Subgraph s = psp_subgraph(g, psp);
  const std::size_t k = stars.size();

  // Coordinates of the primal vertices: (class, leaf position + 1).
  auto local_id = [&](Vertex host) {
    auto it = std::lower_bound(s.parent_vertex.begin(), s.parent_vertex.end(), host);
    return static_cast<Vertex>(it - s.parent_vertex.begin());
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> unit(s.graph.vertex_count(), {kNoEdge, 0});
  for (const StarFactor& st : stars)
    for (std::uint32_t j = 0; j < st.leaves.size(); ++j) unit[local_id(st.leaves[j])] = {st.index, j + 1};

  const Vertex center = local_id(psp.center);
  report.image.assign(s.graph.vertex_count(), 0);
  for (Vertex x = 0; x < s.graph.vertex_count(); ++x) {
    CoordinateVector c(k, 0);
    if (x == center) {
      // all zero
    } else if (unit[x].first != kNoEdge) {
      c[unit[x].first] = unit[x].second;
    } else {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
      for (const Incidence& i : s.graph.incidences(x))
        if (unit[i.neighbor].first != kNoEdge) seen.push_back(unit[i.neighbor]);
      if (seen.size() != 2 || seen[0].first == seen[1].first)
        throw Error(ErrorCode::MapConstructionFailed,
                    "vertex " + std::to_string(s.parent_vertex[x]) + " is not the top of one square");
      for (auto [pos, val] : seen) c[pos] = val;
    }
    report.image[x] = h.codec.encode(c);
  }

  const Vertex zero = h.codec.encode(CoordinateVector(k, 0));
  const VertexSubset ball = neighborhood(h.graph, zero, 2);
  std::vector<Vertex> sorted_image = report.image;
  std::sort(sorted_image.begin(), sorted_image.end());
  const bool injective = std::adjacent_find(sorted_image.begin(), sorted_image.end()) == sorted_image.end();
  const bool onto = injective && std::equal(sorted_image.begin(), sorted_image.end(), ball.members().begin(),
                                            ball.members().end());
  bool homomorphic = true;
  for (const Edge& e : s.graph.edges())
    if (!h.graph.adjacent(report.image[e.u], report.image[e.v])) homomorphic = false;
  std::size_t ball_edges = 0;
  for (const Edge& e : h.graph.edges())
    if (ball.contains(e.u) && ball.contains(e.v)) ++ball_edges;
  report.isomorphic_to_2_ball = onto && homomorphic && ball_edges == s.graph.edge_count();

  bool isometric = injective;
  const std::size_t n = s.graph.vertex_count();
  for (Vertex x = 0; x < n && isometric; ++x) {
    const auto local = bfs_distances(s.graph, x);
    const auto far = bfs_distances(h.graph, report.image[x]);
    for (Vertex y = 0; y < n; ++y)
      if (local[y] != far[report.image[y]]) {
        isometric = false;
        break;
      }
  }
  report.isometric = isometric;
  return report;
}

void write_psp_dot(std::ostream& out, const Graph& g, const PartialStarProduct& psp) {
  const Subgraph s = psp_subgraph(g, psp);
  std::vector<std::uint32_t> cls(s.graph.edge_count());
  std::unique_ptr<bool[]> dashed(new bool[s.graph.edge_count()]);
  for (EdgeId e = 0; e < s.graph.edge_count(); ++e) {
    cls[e] = psp.class_of(s.parent_edge[e]);
    dashed[e] = !psp.is_primal(s.parent_edge[e]);
  }
  DotStyle style;
  style.name = "S" + std::to_string(psp.center);
  style.edge_class = cls;
  style.dashed = {dashed.get(), s.graph.edge_count()};
  style.vertex_names = s.parent_vertex;
  write_dot(out, s.graph, style);
}

}  // namespace cartfact
