#include "cartfact/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "cartfact/errors.hpp"

namespace cartfact {

namespace {

struct Matcher {
  const Graph& a;
  const Graph& b;
  std::vector<Vertex> order;  // vertices of a, most constrained first
  std::vector<Vertex> map;    // a -> b
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex x = order[depth];
    for (Vertex y = 0; y < b.vertex_count(); ++y) {
      if (used[y] || a.degree(x) != b.degree(y)) continue;
      bool fits = true;
      for (std::size_t i = 0; i < depth && fits; ++i) {
        const Vertex z = order[i];
        fits = a.adjacent(x, z) == b.adjacent(y, map[z]);
      }
      if (!fits) continue;
      map[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
    }
    return false;
  }
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool isomorphism_check_small(const Graph& a, const Graph& b) {
  if (a.vertex_count() > kSmallIsomorphismLimit || b.vertex_count() > kSmallIsomorphismLimit)
    throw Error(ErrorCode::TooLarge, "isomorphism check limited to 10 vertices");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;

  Matcher m{a, b, {}, std::vector<Vertex>(a.vertex_count()), std::vector<bool>(b.vertex_count(), false)};
  // Grow the order along adjacency so early choices constrain later ones.
  std::vector<bool> placed(a.vertex_count(), false);
  while (m.order.size() < a.vertex_count()) {
    Vertex best = 0;
    int best_score = -1;
    for (Vertex v = 0; v < a.vertex_count(); ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (Vertex u : m.order) links += a.adjacent(u, v);
      const int score = links * 100 + static_cast<int>(a.degree(v));
      if (score > best_score) best_score = score, best = v;
    }
    placed[best] = true;
    m.order.push_back(best);
  }
  return m.extend(0);
}

}  // namespace cartfact
