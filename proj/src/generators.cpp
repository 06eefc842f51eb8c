#include "cartfact/generators.hpp"

#include <algorithm>
#include <set>

#include "cartfact/errors.hpp"
#include "cartfact/traversal.hpp"

namespace cartfact {

Graph make_path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

Graph make_cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph::from_edges(n, e);
}

Graph make_star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edges(leaves + 1, e);
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

Graph make_complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.push_back({i, static_cast<Vertex>(a + j)});
  return Graph::from_edges(a + b, e);
}

Graph make_hypercube(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t b = 0; b < dim; ++b) {
      Vertex w = v ^ (Vertex{1} << b);
      if (v < w) e.push_back({v, w});
    }
  return Graph::from_edges(n, e);
}

Graph random_tree(std::size_t n, Rng& rng) {
  if (n <= 1) return Graph(n);
  if (n == 2) return make_path(2);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, c});
    if (--degree[c] == 1) leaves.insert(c);
  }
  Vertex a = *leaves.begin();
  Vertex b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return Graph::from_edges(n, edges);
}

Graph random_connected_gnp(std::size_t n, double p, Rng& rng, int attempts) {
  std::bernoulli_distribution coin(p);
  for (int t = 0; t < attempts; ++t) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (coin(rng)) e.push_back({i, j});
    Graph g = Graph::from_edges(n, e);
    if (is_connected(g)) return g;
  }
  Graph tree = random_tree(n, rng);
  std::vector<Edge> e(tree.edges().begin(), tree.edges().end());
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
  std::vector<Edge> e;
  for (const Edge& ed : g.edges()) e.push_back({perm[ed.u], perm[ed.v]});
  return Graph::from_edges(g.vertex_count(), e);
}

}  // namespace cartfact
