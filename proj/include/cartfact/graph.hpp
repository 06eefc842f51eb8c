#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace cartfact {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// Unordered pair stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Simple undirected graph in compressed adjacency form.
///
/// Edge ids are dense 0..m-1 and follow the lexicographic order of the
/// normalized (u, v) pairs. Every neighbor list is sorted ascending, so all
/// iteration done by downstream algorithms is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Normalizes each pair to u < v and collapses duplicates. Throws
  /// Error(SelfLoop) on u == v and Error(VertexOutOfRange) on endpoints >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Incidence> incidences(Vertex v) const {
    return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;

  bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }
  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;

  /// Position of `neighbor` inside the sorted incidence list of `v`.
  std::optional<std::size_t> neighbor_index(Vertex v, Vertex neighbor) const;

  Vertex other_end(EdgeId e, Vertex v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  /// Shared endpoint of two distinct edges, if they are incident.
  std::optional<Vertex> common_vertex(EdgeId e, EdgeId f) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidences_;
};

/// Sorted, duplicate-free vertex set over a parent graph of `parent_size`
/// vertices.
class VertexSubset {
 public:
  VertexSubset() = default;
  VertexSubset(std::size_t parent_size, std::vector<Vertex> members);

  static VertexSubset all(std::size_t parent_size);

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t parent_size() const noexcept { return mask_.size(); }
  bool contains(Vertex v) const { return v < mask_.size() && mask_[v]; }

  friend bool operator==(const VertexSubset& a, const VertexSubset& b) {
    return a.members_ == b.members_ && a.mask_.size() == b.mask_.size();
  }

 private:
  std::vector<Vertex> members_;
  std::vector<bool> mask_;
};

/// A graph derived from a parent together with the maps back to parent ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> parent_vertex;
  std::vector<EdgeId> parent_edge;
};

}  // namespace cartfact
