#include "cartfact/traversal.hpp"

#include <algorithm>
#include <deque>

#include "cartfact/disjoint_sets.hpp"
#include "cartfact/errors.hpp"

namespace cartfact {

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  if (source >= g.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "bfs source out of range");
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.incidences(x)) {
      if (dist[inc.neighbor] == kUnreachable) {
        dist[inc.neighbor] = dist[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

VertexSubset neighborhood(const Graph& g, Vertex v, std::uint32_t radius) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "neighborhood center out of range");
  std::vector<Vertex> members{v};
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  dist[v] = 0;
  for (std::size_t head = 0; head < members.size(); ++head) {
    Vertex x = members[head];
    if (dist[x] == radius) continue;
    for (const Incidence& inc : g.incidences(x)) {
      if (dist[inc.neighbor] == kUnreachable) {
        dist[inc.neighbor] = dist[x] + 1;
        members.push_back(inc.neighbor);
      }
    }
  }
  return VertexSubset(g.vertex_count(), std::move(members));
}

Components connected_components(const Graph& g, std::optional<std::span<const EdgeId>> edge_filter) {
  DisjointSets sets(g.vertex_count());
  if (edge_filter) {
    for (EdgeId e : *edge_filter) sets.unite(g.edge(e).u, g.edge(e).v);
  } else {
    for (const Edge& e : g.edges()) sets.unite(e.u, e.v);
  }
  Components c;
  c.label.assign(g.vertex_count(), kUnreachable);
  std::vector<std::uint32_t> root_label(g.vertex_count(), kUnreachable);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto r = sets.find(v);
    if (root_label[r] == kUnreachable) root_label[r] = static_cast<std::uint32_t>(c.count++);
    c.label[v] = root_label[r];
  }
  return c;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() > 0 && connected_components(g).count == 1;
}

Subgraph induced_subgraph(const Graph& g, const VertexSubset& keep) {
  if (keep.empty()) throw Error(ErrorCode::EmptySubset, "induced subgraph of an empty vertex set");
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (keep.contains(g.edge(e).u) && keep.contains(g.edge(e).v)) edges.push_back(e);
  }
  Subgraph s;
  s.parent_vertex.assign(keep.members().begin(), keep.members().end());
  std::vector<Vertex> local(g.vertex_count(), kUnreachable);
  for (std::size_t i = 0; i < s.parent_vertex.size(); ++i) local[s.parent_vertex[i]] = static_cast<Vertex>(i);
  std::vector<Edge> local_edges;
  local_edges.reserve(edges.size());
  for (EdgeId e : edges) local_edges.push_back({local[g.edge(e).u], local[g.edge(e).v]});
  s.graph = Graph::from_edges(s.parent_vertex.size(), local_edges);
  // Vertex relabeling is monotone, so local edge order matches parent order.
  s.parent_edge = std::move(edges);
  return s;
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Subgraph s;
  for (EdgeId e : sorted) {
    s.parent_vertex.push_back(g.edge(e).u);
    s.parent_vertex.push_back(g.edge(e).v);
  }
  std::sort(s.parent_vertex.begin(), s.parent_vertex.end());
  s.parent_vertex.erase(std::unique(s.parent_vertex.begin(), s.parent_vertex.end()), s.parent_vertex.end());
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(s.parent_vertex.begin(), s.parent_vertex.end(), v) -
                               s.parent_vertex.begin());
  };
  std::vector<Edge> local_edges;
  local_edges.reserve(sorted.size());
  for (EdgeId e : sorted) local_edges.push_back({local(g.edge(e).u), local(g.edge(e).v)});
  s.graph = Graph::from_edges(s.parent_vertex.size(), local_edges);
  s.parent_edge = std::move(sorted);
  return s;
}

std::vector<std::uint32_t> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> d(n * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), d.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
  return d;
}

}  // namespace cartfact
