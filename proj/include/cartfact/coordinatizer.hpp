#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cartfact/covering.hpp"
#include "cartfact/edge_partition.hpp"
#include "cartfact/graph.hpp"
#include "cartfact/product.hpp"

namespace cartfact {

/// Q_i(x): id of the component of the class-i spanning subgraph holding x.
struct ClassComponentIndex {
  std::size_t class_count = 0;
  std::size_t vertex_count = 0;
  std::vector<std::uint32_t> component;  // [class * vertex_count + vertex]

  std::uint32_t of(std::uint32_t cls, Vertex x) const { return component[cls * vertex_count + x]; }
  std::vector<Vertex> members(std::uint32_t cls, Vertex x) const;
};

enum class DeletionReason {
  DuplicateCoordinates,
  InconsistentEdge,
  NoCoordinatizedNeighbor,
  Unreachable,
};

std::string_view to_string(DeletionReason reason);

struct DeletionEntry {
  DeletionReason reason;
  Vertex vertex;                         // working-graph id (for edges: the vertex being checked)
  std::optional<EdgeId> edge;            // working-graph edge id for InconsistentEdge
};

struct FreshLabelEvent {
  Vertex vertex;
  std::uint32_t position;
  std::uint32_t label;
};

struct ConsistencyReport {
  bool vertex_removed = false;
  std::vector<EdgeId> removed_edges;

  bool empty() const { return !vertex_removed && removed_edges.empty(); }
};

/// H as a plain graph over its coordinatized survivors.
struct CoordinatizedGraph {
  Subgraph h;                                // parent ids refer to the working graph
  std::vector<Vertex> host_vertex;           // per h vertex
  std::vector<CoordinateVector> coordinates; // per h vertex
  std::vector<std::uint32_t> edge_class;     // per h edge
  std::size_t class_count = 0;
};

/// Working copy H of the covered union with per-vertex coordinate vectors.
class CoordinateAssignment {
 public:
  CoordinateAssignment() = default;
  /// Starts with every vertex and edge alive and nothing coordinatized.
  CoordinateAssignment(Graph working, EdgePartition classes, Vertex root,
                       std::vector<Vertex> host_vertex = {});

  const Graph& graph() const noexcept { return graph_; }
  const EdgePartition& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.class_count(); }
  Vertex root() const noexcept { return root_; }
  Vertex host_vertex(Vertex x) const { return host_vertex_[x]; }

  bool vertex_alive(Vertex x) const { return vertex_alive_[x]; }
  bool edge_alive(EdgeId e) const { return edge_alive_[e]; }
  bool has_coordinates(Vertex x) const { return coords_[x].has_value(); }
  const CoordinateVector& coordinates(Vertex x) const { return *coords_[x]; }

  const std::vector<DeletionEntry>& deletions() const noexcept { return deletions_; }
  const std::vector<FreshLabelEvent>& fresh_labels() const noexcept { return fresh_labels_; }
  bool deleted_nothing() const noexcept { return deletions_.empty(); }

  /// Checks duplicates by scanning every vertex instead of the index.
  void set_literal_duplicate_scan(bool on) { literal_scan_ = on; }

  /// Sets the vector of an alive vertex without any checking.
  void assign(Vertex x, CoordinateVector c);
  void remove_vertex(Vertex x, DeletionReason reason);
  void remove_edge(EdgeId e, Vertex checked, DeletionReason reason);
  void record_fresh_label(Vertex x, std::uint32_t position, std::uint32_t label);

  /// Coordinatized vertex holding exactly c, other than `except`.
  std::optional<Vertex> find_duplicate(const CoordinateVector& c, Vertex except) const;

  CoordinatizedGraph surviving() const;

 private:
  Graph graph_;
  EdgePartition classes_;
  Vertex root_ = 0;
  std::vector<Vertex> host_vertex_;
  std::vector<bool> vertex_alive_;
  std::vector<bool> edge_alive_;
  std::vector<std::optional<CoordinateVector>> coords_;
  std::map<CoordinateVector, Vertex> by_vector_;
  std::vector<DeletionEntry> deletions_;
  std::vector<FreshLabelEvent> fresh_labels_;
  bool literal_scan_ = false;
};

/// Components Q_i(x) over the edges of `g` marked alive (all when empty).
ClassComponentIndex class_components(const Graph& g, const EdgePartition& classes,
                                     std::span<const bool> edge_alive = {});

/// Repeatedly joins the first pair of classes i < j whose components through
/// some vertex share a second vertex, one join per round, until none remain.
std::pair<EdgePartition, ClassComponentIndex> merge_until_consistent(const Graph& g,
                                                                     const EdgePartition& classes);
std::pair<EdgePartition, ClassComponentIndex> merge_until_consistent(const CoveringResult& cov);

/// Removes x if its vector duplicates another coordinatized vertex,
/// otherwise removes every edge from x to a coordinatized neighbor that does
/// not differ in exactly its class position.
ConsistencyReport consistency_check(CoordinateAssignment& ca, Vertex x);

/// W-vertex whose PSP has the most classes, smallest id on ties.
Vertex default_root(const CoveringResult& cov);

struct CoordinatizeOptions {
  std::optional<Vertex> root;  // host id, must lie in W
  bool literal_duplicate_scan = false;
};

/// Merges inconsistent classes, seeds the layers through the root, then
/// coordinatizes the remaining vertices level by level, deleting what cannot
/// be made consistent. Throws RootNotInW.
CoordinateAssignment assign_coordinates(const CoveringResult& cov, const CoordinatizeOptions& options = {});

/// True iff vectors are pairwise distinct and every alive edge between
/// coordinatized vertices differs exactly in its class position.
bool coordinates_consistent(const CoordinateAssignment& ca);
bool coordinates_consistent(const CoordinatizedGraph& h);

}  // namespace cartfact
