#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cartfact/graph.hpp"

namespace cartfact {

/// Breadth-first distances; unreachable vertices hold kUnreachable.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

/// Closed k-neighborhood N_k[v].
VertexSubset neighborhood(const Graph& g, Vertex v, std::uint32_t radius);

struct Components {
  std::vector<std::uint32_t> label;  // per vertex, numbered by smallest member
  std::size_t count = 0;
};

/// Components of g, or of the spanning subgraph on `edge_filter` when given.
Components connected_components(const Graph& g,
                                std::optional<std::span<const EdgeId>> edge_filter = std::nullopt);

bool is_connected(const Graph& g);

/// Throws EmptySubset.
Subgraph induced_subgraph(const Graph& g, const VertexSubset& keep);

/// Subgraph on the given edges and their endpoints. Vertex and edge order
/// follow the parent, so keeping every edge reproduces parent ids.
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

/// All-pairs distances by repeated BFS, row-major n*n.
std::vector<std::uint32_t> all_pairs_distances(const Graph& g);

}  // namespace cartfact
