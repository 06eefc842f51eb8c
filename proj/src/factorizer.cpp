#include "cartfact/factorizer.hpp"

#include <algorithm>
#include <set>

#include "cartfact/errors.hpp"

namespace cartfact {

std::optional<Vertex> Factor::vertex_of(std::uint32_t label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

FactorSet extract_factors(const CoordinatizedGraph& h) {
  if (!coordinates_consistent(h)) throw Error(ErrorCode::InvalidAssignment, "coordinates are not consistent");
  FactorSet fs;
  fs.dimension = h.class_count;
  fs.embedding = h.coordinates;
  for (const auto& c : h.coordinates)
    if (c.size() != fs.dimension) throw Error(ErrorCode::InvalidAssignment, "vector length differs from class count");

  for (std::uint32_t pos = 0; pos < fs.dimension; ++pos) {
    Factor f;
    f.position = pos;
    for (const auto& c : h.coordinates) f.labels.push_back(c[pos]);
    std::sort(f.labels.begin(), f.labels.end());
    f.labels.erase(std::unique(f.labels.begin(), f.labels.end()), f.labels.end());
    if (f.labels.size() <= 1) {
      fs.dropped_positions.push_back(pos);
      continue;
    }
    std::vector<Edge> edges;
    for (const Edge& e : h.h.graph.edges()) {
      const std::uint32_t a = h.coordinates[e.u][pos];
      const std::uint32_t b = h.coordinates[e.v][pos];
      if (a != b) edges.push_back({*f.vertex_of(a), *f.vertex_of(b)});
    }
    f.graph = Graph::from_edges(f.labels.size(), edges);
    fs.factors.push_back(std::move(f));
  }
  return fs;
}

FactorSet extract_factors(const CoordinateAssignment& ca) { return extract_factors(ca.surviving()); }

bool verify_embedding(const FactorSet& fs, const Graph& h) {
  if (fs.embedding.size() != h.vertex_count()) return false;
  std::set<CoordinateVector> seen(fs.embedding.begin(), fs.embedding.end());
  if (seen.size() != fs.embedding.size()) return false;
  std::vector<const Factor*> at(fs.dimension, nullptr);
  for (const Factor& f : fs.factors) at[f.position] = &f;

  for (const Edge& e : h.edges()) {
    const auto& a = fs.embedding[e.u];
    const auto& b = fs.embedding[e.v];
    std::size_t diff = 0, where = 0;
    for (std::size_t p = 0; p < fs.dimension; ++p)
      if (a[p] != b[p]) ++diff, where = p;
    if (diff != 1 || at[where] == nullptr) return false;
    const Factor& f = *at[where];
    const auto x = f.vertex_of(a[where]);
    const auto y = f.vertex_of(b[where]);
    if (!x || !y || !f.graph.adjacent(*x, *y)) return false;
  }
  return true;
}

bool embedding_is_isomorphism(const FactorSet& fs, const Graph& h) {
  if (!verify_embedding(fs, h)) return false;
  std::size_t vertices = 1;
  for (const Factor& f : fs.factors) vertices *= f.graph.vertex_count();
  std::size_t edges = 0;
  for (const Factor& f : fs.factors) edges += f.graph.edge_count() * (vertices / f.graph.vertex_count());
  return vertices == h.vertex_count() && edges == h.edge_count();
}

ProductGraph factor_product(const FactorSet& fs) {
  std::vector<Graph> graphs;
  for (const Factor& f : fs.factors) graphs.push_back(f.graph);
  if (graphs.empty()) graphs.push_back(Graph(1));
  return cartesian_product(graphs);
}

}  // namespace cartfact
