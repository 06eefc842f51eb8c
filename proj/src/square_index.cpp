#include "cartfact/square_index.hpp"

#include <algorithm>

#include "cartfact/errors.hpp"

namespace cartfact {

namespace {

/// |N[x] ∩ N[v]| by merging the sorted neighbor lists.
std::size_t closed_intersection(const Graph& g, Vertex x, Vertex v) {
  auto a = g.incidences(x);
  auto b = g.incidences(v);
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].neighbor < b[j].neighbor) {
      ++i;
    } else if (b[j].neighbor < a[i].neighbor) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  if (g.adjacent(x, v)) count += 2;  // x in N[v] and v in N[x]
  return count;
}

struct TopHit {
  Vertex top;
  std::uint32_t slot;  // incidence position at the spanning vertex
};

/// Collects (x, a) for every path v - u_a - x with x != v, grouped by x.
void two_paths(const Graph& g, Vertex v, std::vector<TopHit>& hits, bool only_larger) {
  hits.clear();
  auto inc = g.incidences(v);
  for (std::uint32_t a = 0; a < inc.size(); ++a) {
    Vertex u = inc[a].neighbor;
    if (only_larger && u < v) continue;
    for (const Incidence& second : g.incidences(u)) {
      if (second.neighbor == v) continue;
      if (only_larger && second.neighbor < v) continue;
      hits.push_back({second.neighbor, a});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const TopHit& p, const TopHit& q) {
    return p.top != q.top ? p.top < q.top : p.slot < q.slot;
  });
}

}  // namespace

std::vector<SquareRecord> enumerate_squares(const Graph& g) {
  std::vector<SquareRecord> out;
  std::vector<TopHit> hits;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    two_paths(g, v, hits, true);
    auto inc = g.incidences(v);
    for (std::size_t lo = 0; lo < hits.size();) {
      std::size_t hi = lo;
      while (hi < hits.size() && hits[hi].top == hits[lo].top) ++hi;
      const Vertex x = hits[lo].top;
      for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = i + 1; j < hi; ++j) {
          const Incidence& eu = inc[hits[i].slot];
          const Incidence& ew = inc[hits[j].slot];
          SquareRecord r;
          r.vertices = {v, eu.neighbor, x, ew.neighbor};
          r.e = eu.edge;
          r.f = ew.edge;
          r.opposite_e = *g.edge_between(ew.neighbor, x);
          r.opposite_f = *g.edge_between(eu.neighbor, x);
          r.chordless = !g.adjacent(v, x) && !g.adjacent(eu.neighbor, ew.neighbor);
          out.push_back(r);
        }
      lo = hi;
    }
  }
  return out;
}

SquareIndex::SquareIndex(const Graph& g) : graph_(&g), offsets_(g.vertex_count() + 1, 0) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    offsets_[v + 1] = offsets_[v] + d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  table_.resize(offsets_.back());

  std::vector<TopHit> hits;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    two_paths(g, v, hits, false);
    for (std::size_t lo = 0; lo < hits.size();) {
      std::size_t hi = lo;
      while (hi < hits.size() && hits[hi].top == hits[lo].top) ++hi;
      for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = i + 1; j < hi; ++j) {
          const std::size_t a = hits[i].slot, b = hits[j].slot, d = g.degree(v);
          auto& s = table_[offsets_[v] + a * d - a * (a + 1) / 2 + (b - a - 1)];
          ++s.count;
          s.top = hits[lo].top;
        }
      lo = hi;
    }
    auto inc = g.incidences(v);
    const std::size_t d = inc.size();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        auto& s = table_[offsets_[v] + a * d - a * (a + 1) / 2 + (b - a - 1)];
        if (s.count != 1) continue;
        s.chordless = !g.adjacent(v, s.top) && !g.adjacent(inc[a].neighbor, inc[b].neighbor);
        s.unique_top = closed_intersection(g, s.top, v) == 2;
      }
  }
}

PairSquareSummary SquareIndex::summary(EdgeId e, EdgeId f) const {
  const Graph& g = *graph_;
  if (e >= g.edge_count() || f >= g.edge_count()) throw Error(ErrorCode::NotIncident, "edge id out of range");
  auto v = g.common_vertex(e, f);
  if (!v) throw Error(ErrorCode::NotIncident, "edges do not share exactly one endpoint");
  auto a = g.neighbor_index(*v, g.other_end(e, *v));
  auto b = g.neighbor_index(*v, g.other_end(f, *v));
  return summary_at(*v, *a, *b);
}

PairSquareSummary pair_summary(const Graph& g, EdgeId e, EdgeId f) {
  return SquareIndex(g).summary(e, f);
}

bool spans_unique_chordless_square(const Graph& g, EdgeId e, EdgeId f) {
  return pair_summary(g, e, f).unique_chordless_with_unique_top();
}

}  // namespace cartfact
