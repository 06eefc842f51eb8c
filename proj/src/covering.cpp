#include "cartfact/covering.hpp"

#include <algorithm>

#include "cartfact/disjoint_sets.hpp"
#include "cartfact/errors.hpp"
#include "cartfact/parallel.hpp"
#include "cartfact/traversal.hpp"

namespace cartfact {

namespace {

std::vector<Vertex> processing_order(const VertexSubset& w, const CoverOptions& options) {
  std::vector<Vertex> order(w.members().begin(), w.members().end());
  if (!options.order) return order;
  std::vector<Vertex> given = *options.order;
  std::vector<Vertex> check = given;
  std::sort(check.begin(), check.end());
  if (check != order) throw Error(ErrorCode::InvalidArgument, "processing order is not a permutation of W");
  return given;
}

/// Color graph made explicit: one node per (key, edge) incidence, joined to
/// the next incidence with the same key and to the next with the same edge.
std::vector<std::uint32_t> color_graph_labels(const std::vector<std::vector<std::pair<std::size_t, EdgeId>>>& by_key,
                                              std::size_t host_edges, std::span<const EdgeId> union_edges) {
  std::vector<std::pair<std::size_t, EdgeId>> nodes;
  std::vector<Edge> links;
  std::vector<Vertex> last_on_edge(host_edges, kUnreachable);
  for (const auto& group : by_key) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      const Vertex node = static_cast<Vertex>(nodes.size());
      nodes.push_back(group[i]);
      if (i > 0) links.push_back({node - 1, node});
      Vertex& prev = last_on_edge[group[i].second];
      if (prev != kUnreachable) links.push_back({prev, node});
      prev = node;
    }
  }
  const Graph gamma = Graph::from_edges(nodes.size(), links);
  const Components comp = connected_components(gamma);
  std::vector<std::uint32_t> raw;
  raw.reserve(union_edges.size());
  for (EdgeId e : union_edges) raw.push_back(comp.label[last_on_edge[e]]);
  return raw;
}

}  // namespace

CoveringResult cover(const Graph& g, const VertexSubset& w, const CoverOptions& options) {
  if (w.empty()) throw Error(ErrorCode::EmptySubset, "W is empty");
  if (w.parent_size() != g.vertex_count()) throw Error(ErrorCode::InvalidArgument, "W does not match the graph");
  const std::vector<Vertex> order = processing_order(w, options);
  const SquareIndex index(g);

  CoveringResult result;
  result.subset = w;
  result.psps.resize(w.size());
  const std::size_t threads = options.threads == 0 ? configured_threads() : options.threads;
  parallel_for(w.size(), threads, [&](std::size_t i) { result.psps[i] = build_psp(g, index, w.members()[i]); });

  std::vector<EdgeId> union_edges;
  for (const PartialStarProduct& p : result.psps) union_edges.insert(union_edges.end(), p.edges.begin(), p.edges.end());
  std::sort(union_edges.begin(), union_edges.end());
  union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());

  // Keys are (W vertex, local class), numbered in processing order.
  std::vector<std::vector<std::pair<std::size_t, EdgeId>>> by_key;
  for (Vertex v : order) {
    const auto pos = static_cast<std::size_t>(std::lower_bound(w.members().begin(), w.members().end(), v) -
                                              w.members().begin());
    const PartialStarProduct& p = result.psps[pos];
    const std::size_t base = by_key.size();
    by_key.resize(base + p.class_count());
    for (std::size_t i = 0; i < p.edges.size(); ++i)
      by_key[base + p.classes.class_of(i)].emplace_back(base + p.classes.class_of(i), p.edges[i]);
  }

  std::vector<std::uint32_t> raw;
  if (options.literal_color_graph) {
    raw = color_graph_labels(by_key, g.edge_count(), union_edges);
  } else {
    DisjointSets keys(by_key.size());
    std::vector<std::size_t> owner(g.edge_count(), static_cast<std::size_t>(-1));
    for (const auto& group : by_key)
      for (auto [key, e] : group) {
        if (owner[e] == static_cast<std::size_t>(-1)) owner[e] = key;
        else keys.unite(owner[e], key);
      }
    raw.reserve(union_edges.size());
    for (EdgeId e : union_edges) raw.push_back(static_cast<std::uint32_t>(keys.find(owner[e])));
  }
  result.partition = EdgePartition::from_labels(raw);

  if (union_edges.empty()) {
    result.union_graph.graph = Graph(w.size());
    result.union_graph.parent_vertex.assign(w.members().begin(), w.members().end());
  } else {
    result.union_graph = edge_subgraph(g, union_edges);
  }
  result.subset_connected = is_connected(induced_subgraph(g, w).graph);
  return result;
}

std::optional<std::uint32_t> CoveringResult::class_of_host_edge(EdgeId e) const {
  const auto& pe = union_graph.parent_edge;
  auto it = std::lower_bound(pe.begin(), pe.end(), e);
  if (it == pe.end() || *it != e) return std::nullopt;
  return partition.class_of(static_cast<std::size_t>(it - pe.begin()));
}

std::optional<Vertex> CoveringResult::union_vertex(Vertex host) const {
  const auto& pv = union_graph.parent_vertex;
  auto it = std::lower_bound(pv.begin(), pv.end(), host);
  if (it == pv.end() || *it != host) return std::nullopt;
  return static_cast<Vertex>(it - pv.begin());
}

const PartialStarProduct& CoveringResult::psp_of(Vertex host) const {
  auto m = subset.members();
  auto it = std::lower_bound(m.begin(), m.end(), host);
  if (it == m.end() || *it != host) throw Error(ErrorCode::InvalidArgument, "vertex not in W");
  return psps[static_cast<std::size_t>(it - m.begin())];
}

EdgePartition compute_delta_star(const Graph& g, const CoverOptions& options) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  CoveringResult c = cover(g, VertexSubset::all(g.vertex_count()), options);
  // With W = V every edge is primal at its endpoints, so U = G with the same ids.
  return std::move(c.partition);
}

}  // namespace cartfact
