#include "cartfact/coordinatizer.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <tuple>

#include "cartfact/errors.hpp"
#include "cartfact/traversal.hpp"

namespace cartfact {

std::string_view to_string(DeletionReason reason) {
  switch (reason) {
    case DeletionReason::DuplicateCoordinates: return "DuplicateCoordinates";
    case DeletionReason::InconsistentEdge: return "InconsistentEdge";
    case DeletionReason::NoCoordinatizedNeighbor: return "NoCoordinatizedNeighbor";
    case DeletionReason::Unreachable: return "Unreachable";
  }
  return "Unknown";
}

std::vector<Vertex> ClassComponentIndex::members(std::uint32_t cls, Vertex x) const {
  std::vector<Vertex> out;
  const std::uint32_t id = of(cls, x);
  for (Vertex y = 0; y < vertex_count; ++y)
    if (of(cls, y) == id) out.push_back(y);
  return out;
}

ClassComponentIndex class_components(const Graph& g, const EdgePartition& classes, std::span<const bool> edge_alive) {
  ClassComponentIndex idx;
  idx.class_count = classes.class_count();
  idx.vertex_count = g.vertex_count();
  idx.component.resize(idx.class_count * idx.vertex_count);
  const std::size_t n = g.vertex_count();
  for (std::uint32_t c = 0; c < idx.class_count; ++c) {
    DisjointSets sets(n);
    for (std::uint32_t e : classes.members(c))
      if (edge_alive.empty() || edge_alive[e]) sets.unite(g.edge(e).u, g.edge(e).v);
    // Component ids are the smallest vertex of the component.
    std::vector<std::uint32_t> smallest(n, kUnreachable);
    for (Vertex x = 0; x < n; ++x) {
      auto& s = smallest[sets.find(x)];
      if (s == kUnreachable) s = x;
      idx.component[c * n + x] = s;
    }
  }
  return idx;
}

namespace {

/// First pair i < j whose components through some vertex share another
/// vertex, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> first_violation(const Graph& g, const EdgePartition& classes,
                                                                         const ClassComponentIndex& idx) {
  // (i, j, Q_i id, Q_j id, vertex) over vertices holding edges of both classes.
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t, Vertex>> rows;
  std::vector<std::uint32_t> present;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    present.clear();
    for (const Incidence& i : g.incidences(x)) present.push_back(classes.class_of(i.edge));
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());
    for (std::size_t a = 0; a < present.size(); ++a)
      for (std::size_t b = a + 1; b < present.size(); ++b)
        rows.emplace_back(present[a], present[b], idx.of(present[a], x), idx.of(present[b], x), x);
  }
  std::sort(rows.begin(), rows.end());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& p = rows[r - 1];
    const auto& q = rows[r];
    if (std::get<0>(p) == std::get<0>(q) && std::get<1>(p) == std::get<1>(q) && std::get<2>(p) == std::get<2>(q) &&
        std::get<3>(p) == std::get<3>(q))
      return std::pair{std::get<0>(p), std::get<1>(p)};
  }
  return std::nullopt;
}

}  // namespace

std::pair<EdgePartition, ClassComponentIndex> merge_until_consistent(const Graph& g, const EdgePartition& classes) {
  EdgePartition current = classes;
  for (;;) {
    ClassComponentIndex idx = class_components(g, current);
    auto bad = first_violation(g, current, idx);
    if (!bad) return {std::move(current), std::move(idx)};
    current = current.merged(bad->first, bad->second);
  }
}

std::pair<EdgePartition, ClassComponentIndex> merge_until_consistent(const CoveringResult& cov) {
  return merge_until_consistent(cov.union_graph.graph, cov.partition);
}

CoordinateAssignment::CoordinateAssignment(Graph working, EdgePartition classes, Vertex root,
                                           std::vector<Vertex> host_vertex)
    : graph_(std::move(working)),
      classes_(std::move(classes)),
      root_(root),
      host_vertex_(std::move(host_vertex)),
      vertex_alive_(graph_.vertex_count(), true),
      edge_alive_(graph_.edge_count(), true),
      coords_(graph_.vertex_count()) {
  if (classes_.size() != graph_.edge_count())
    throw Error(ErrorCode::InvalidArgument, "partition does not cover the working graph");
  if (root_ >= graph_.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "root out of range");
  if (host_vertex_.empty()) {
    host_vertex_.resize(graph_.vertex_count());
    for (Vertex x = 0; x < graph_.vertex_count(); ++x) host_vertex_[x] = x;
  }
}

void CoordinateAssignment::assign(Vertex x, CoordinateVector c) {
  if (!vertex_alive_[x]) throw Error(ErrorCode::InvalidAssignment, "vertex was removed");
  if (c.size() != class_count()) throw Error(ErrorCode::InvalidAssignment, "vector length differs from class count");
  if (coords_[x]) {
    auto it = by_vector_.find(*coords_[x]);
    if (it != by_vector_.end() && it->second == x) by_vector_.erase(it);
  }
  by_vector_.emplace(c, x);
  coords_[x] = std::move(c);
}

void CoordinateAssignment::remove_vertex(Vertex x, DeletionReason reason) {
  if (!vertex_alive_[x]) return;
  vertex_alive_[x] = false;
  for (const Incidence& i : graph_.incidences(x)) edge_alive_[i.edge] = false;
  if (coords_[x]) {
    auto it = by_vector_.find(*coords_[x]);
    if (it != by_vector_.end() && it->second == x) by_vector_.erase(it);
    coords_[x].reset();
  }
  deletions_.push_back({reason, x, std::nullopt});
}

void CoordinateAssignment::remove_edge(EdgeId e, Vertex checked, DeletionReason reason) {
  if (!edge_alive_[e]) return;
  edge_alive_[e] = false;
  deletions_.push_back({reason, checked, e});
}

void CoordinateAssignment::record_fresh_label(Vertex x, std::uint32_t position, std::uint32_t label) {
  fresh_labels_.push_back({x, position, label});
}

std::optional<Vertex> CoordinateAssignment::find_duplicate(const CoordinateVector& c, Vertex except) const {
  if (literal_scan_) {
    for (Vertex y = 0; y < graph_.vertex_count(); ++y)
      if (y != except && vertex_alive_[y] && coords_[y] && *coords_[y] == c) return y;
    return std::nullopt;
  }
  auto it = by_vector_.find(c);
  if (it == by_vector_.end() || it->second == except) return std::nullopt;
  return it->second;
}

CoordinatizedGraph CoordinateAssignment::surviving() const {
  CoordinatizedGraph out;
  out.class_count = class_count();
  std::vector<Vertex> local(graph_.vertex_count(), kUnreachable);
  for (Vertex x = 0; x < graph_.vertex_count(); ++x)
    if (vertex_alive_[x] && coords_[x]) {
      local[x] = static_cast<Vertex>(out.h.parent_vertex.size());
      out.h.parent_vertex.push_back(x);
      out.host_vertex.push_back(host_vertex_[x]);
      out.coordinates.push_back(*coords_[x]);
    }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
    const Edge& ed = graph_.edge(e);
    if (!edge_alive_[e] || local[ed.u] == kUnreachable || local[ed.v] == kUnreachable) continue;
    edges.push_back({local[ed.u], local[ed.v]});
    out.h.parent_edge.push_back(e);
    out.edge_class.push_back(classes_.class_of(e));
  }
  // Local ids are monotone in parent ids, so edge order is preserved.
  out.h.graph = Graph::from_edges(out.h.parent_vertex.size(), edges);
  return out;
}

ConsistencyReport consistency_check(CoordinateAssignment& ca, Vertex x) {
  ConsistencyReport report;
  if (!ca.vertex_alive(x) || !ca.has_coordinates(x)) return report;
  const CoordinateVector& cx = ca.coordinates(x);
  if (ca.find_duplicate(cx, x)) {
    ca.remove_vertex(x, DeletionReason::DuplicateCoordinates);
    report.vertex_removed = true;
    return report;
  }
  const Graph& g = ca.graph();
  for (const Incidence& i : g.incidences(x)) {
    const Vertex y = i.neighbor;
    if (!ca.edge_alive(i.edge) || !ca.vertex_alive(y) || !ca.has_coordinates(y)) continue;
    const std::uint32_t r = ca.classes().class_of(i.edge);
    const CoordinateVector& cy = ca.coordinates(y);
    bool ok = cx[r] != cy[r];
    for (std::size_t p = 0; p < cx.size() && ok; ++p)
      if (p != r && cx[p] != cy[p]) ok = false;
    if (!ok) {
      ca.remove_edge(i.edge, x, DeletionReason::InconsistentEdge);
      report.removed_edges.push_back(i.edge);
    }
  }
  return report;
}

Vertex default_root(const CoveringResult& cov) {
  Vertex best = cov.subset.members().front();
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < cov.psps.size(); ++i)
    if (cov.psps[i].class_count() > best_count) {
      best_count = cov.psps[i].class_count();
      best = cov.subset.members()[i];
    }
  return best;
}

CoordinateAssignment assign_coordinates(const CoveringResult& cov, const CoordinatizeOptions& options) {
  const Vertex root_host = options.root.value_or(default_root(cov));
  if (!cov.subset.contains(root_host)) throw Error(ErrorCode::RootNotInW, "root is not in W");
  const auto root_local = cov.union_vertex(root_host);
  if (!root_local) throw Error(ErrorCode::RootNotInW, "root is not covered");
  const Vertex v0 = *root_local;

  auto [classes, comps] = merge_until_consistent(cov);
  const Graph& u = cov.union_graph.graph;
  const std::size_t k = classes.class_count();
  CoordinateAssignment ca(u, classes, v0, cov.union_graph.parent_vertex);
  ca.set_literal_duplicate_scan(options.literal_duplicate_scan);

  // Initial layers Q_i(v0), labeled in BFS order through class-i edges.
  std::vector<std::uint32_t> next_label(k, 0);
  std::vector<Vertex> seeded{v0};
  ca.assign(v0, CoordinateVector(k, 0));
  std::vector<std::uint32_t> seen(u.vertex_count(), kUnreachable);
  for (std::uint32_t c = 0; c < k; ++c) {
    std::deque<Vertex> queue{v0};
    seen[v0] = c;
    std::uint32_t label = 0;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (x != v0) {
        CoordinateVector vec(k, 0);
        vec[c] = ++label;
        ca.assign(x, std::move(vec));
        seeded.push_back(x);
      }
      for (const Incidence& i : u.incidences(x))
        if (classes.class_of(i.edge) == c && seen[i.neighbor] != c) {
          seen[i.neighbor] = c;
          queue.push_back(i.neighbor);
        }
    }
    next_label[c] = label + 2;  // |Q_c(v0)| + 1
  }
  for (Vertex x : seeded) consistency_check(ca, x);

  // Static levels from the root, computed once.
  const auto dist = bfs_distances(u, v0);
  std::uint32_t dmax = 0;
  for (Vertex x = 0; x < u.vertex_count(); ++x) {
    if (dist[x] == kUnreachable) ca.remove_vertex(x, DeletionReason::Unreachable);
    else dmax = std::max(dmax, dist[x]);
  }
  std::vector<std::vector<Vertex>> levels(dmax + 1);
  for (Vertex x = 0; x < u.vertex_count(); ++x)
    if (dist[x] != kUnreachable) levels[dist[x]].push_back(x);

  std::vector<std::pair<Vertex, std::uint32_t>> known;  // (neighbor, edge class)
  for (std::uint32_t level = 1; level <= dmax; ++level)
    for (Vertex x : levels[level]) {
      if (!ca.vertex_alive(x) || ca.has_coordinates(x)) continue;
      known.clear();
      for (const Incidence& i : u.incidences(x))
        if (ca.edge_alive(i.edge) && ca.vertex_alive(i.neighbor) && ca.has_coordinates(i.neighbor))
          known.emplace_back(i.neighbor, classes.class_of(i.edge));
      if (known.empty()) {
        ca.remove_vertex(x, DeletionReason::NoCoordinatizedNeighbor);
        continue;
      }
      // Neighbor lists are sorted, so known.front() has the smallest id.
      const auto [nu, r] = known.front();
      auto other = std::find_if(known.begin(), known.end(), [r = r](const auto& p) { return p.second != r; });
      CoordinateVector c = ca.coordinates(nu);
      if (other == known.end()) {
        c[r] = next_label[r]++;
        ca.record_fresh_label(x, r, c[r]);
      } else {
        const auto [nw, s] = *other;
        c[r] = ca.coordinates(nw)[r];
        c[s] = ca.coordinates(nu)[s];
      }
      ca.assign(x, std::move(c));
      consistency_check(ca, x);
    }
  return ca;
}

namespace {

bool check_vectors(const Graph& g, std::span<const std::uint32_t> edge_class,
                   const std::function<bool(Vertex)>& usable, const std::function<bool(EdgeId)>& edge_usable,
                   const std::function<const CoordinateVector&(Vertex)>& coords) {
  std::set<CoordinateVector> seen;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (usable(x) && !seen.insert(coords(x)).second) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!edge_usable(e) || !usable(ed.u) || !usable(ed.v)) continue;
    const auto& a = coords(ed.u);
    const auto& b = coords(ed.v);
    const std::uint32_t r = edge_class[e];
    if (a.size() != b.size() || r >= a.size() || a[r] == b[r]) return false;
    for (std::size_t p = 0; p < a.size(); ++p)
      if (p != r && a[p] != b[p]) return false;
  }
  return true;
}

}  // namespace

bool coordinates_consistent(const CoordinateAssignment& ca) {
  return check_vectors(
      ca.graph(), ca.classes().labels(), [&](Vertex x) { return ca.vertex_alive(x) && ca.has_coordinates(x); },
      [&](EdgeId e) { return ca.edge_alive(e); }, [&](Vertex x) -> const CoordinateVector& { return ca.coordinates(x); });
}

bool coordinates_consistent(const CoordinatizedGraph& h) {
  return check_vectors(
      h.h.graph, h.edge_class, [](Vertex) { return true; }, [](EdgeId) { return true; },
      [&](Vertex x) -> const CoordinateVector& { return h.coordinates[x]; });
}

}  // namespace cartfact
