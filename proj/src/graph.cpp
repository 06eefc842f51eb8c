#include "cartfact/graph.hpp"

#include <algorithm>
#include <string>

#include "cartfact/errors.hpp"

namespace cartfact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::EmptyFactor: return "EmptyFactor";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotIncident: return "NotIncident";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MapConstructionFailed: return "MapConstructionFailed";
    case ErrorCode::RootNotInW: return "RootNotInW";
    case ErrorCode::InvalidAssignment: return "InvalidAssignment";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoSeed: return "NoSeed";
    case ErrorCode::CannotPreserveConnectivity: return "CannotPreserveConnectivity";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside " +
                      std::to_string(n) + " vertices");
    }
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.incidences_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.incidences_[fill[e.u]++] = {e.v, id};
    g.incidences_[fill[e.v]++] = {e.u, id};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::optional<std::size_t> Graph::neighbor_index(Vertex v, Vertex neighbor) const {
  auto inc = incidences(v);
  auto it = std::lower_bound(inc.begin(), inc.end(), neighbor,
                             [](const Incidence& i, Vertex x) { return i.neighbor < x; });
  if (it == inc.end() || it->neighbor != neighbor) return std::nullopt;
  return static_cast<std::size_t>(it - inc.begin());
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto idx = neighbor_index(a, b);
  if (!idx) return std::nullopt;
  return incidences(a)[*idx].edge;
}

std::optional<Vertex> Graph::common_vertex(EdgeId e, EdgeId f) const {
  if (e == f) return std::nullopt;
  const Edge& a = edges_[e];
  const Edge& b = edges_[f];
  if (a.u == b.u || a.u == b.v) return a.u;
  if (a.v == b.u || a.v == b.v) return a.v;
  return std::nullopt;
}

VertexSubset::VertexSubset(std::size_t parent_size, std::vector<Vertex> members)
    : members_(std::move(members)), mask_(parent_size, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Vertex v : members_) {
    if (v >= parent_size) {
      throw Error(ErrorCode::VertexOutOfRange, "subset vertex " + std::to_string(v) + " out of range");
    }
    mask_[v] = true;
  }
}

VertexSubset VertexSubset::all(std::size_t parent_size) {
  std::vector<Vertex> m(parent_size);
  for (std::size_t i = 0; i < parent_size; ++i) m[i] = static_cast<Vertex>(i);
  return VertexSubset(parent_size, std::move(m));
}

}  // namespace cartfact
