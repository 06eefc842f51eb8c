#pragma once

#include <optional>
#include <vector>

#include "cartfact/edge_partition.hpp"
#include "cartfact/graph.hpp"
#include "cartfact/psp.hpp"

namespace cartfact {

struct CoverOptions {
  /// Build the color graph explicitly and take its connected components
  /// instead of merging through disjoint sets. Same result, slower.
  bool literal_color_graph = false;
  /// Processing order of W; must be a permutation of the subset.
  std::optional<std::vector<Vertex>> order;
  /// 0 reads CARTFACT_THREADS.
  std::size_t threads = 1;
};

struct CoveringResult {
  Subgraph union_graph;            // U = union of S_v over W, ids map to the host
  EdgePartition partition;         // classes over union_graph edges
  VertexSubset subset;             // W over the host
  std::vector<PartialStarProduct> psps;  // aligned with subset.members()
  bool subset_connected = false;

  /// Class of a host edge, or nullopt if the edge is not in U.
  std::optional<std::uint32_t> class_of_host_edge(EdgeId e) const;
  /// U vertex id of a host vertex, if present.
  std::optional<Vertex> union_vertex(Vertex host) const;
  const PartialStarProduct& psp_of(Vertex host) const;
};

/// Covers W by partial star products and merges their local classes.
/// Throws EmptySubset.
CoveringResult cover(const Graph& g, const VertexSubset& w, const CoverOptions& options = {});

/// delta* of a connected graph as a partition over host edge ids.
/// Throws Disconnected.
EdgePartition compute_delta_star(const Graph& g, const CoverOptions& options = {});

}  // namespace cartfact
