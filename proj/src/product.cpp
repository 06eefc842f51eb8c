#include "cartfact/product.hpp"

#include "cartfact/errors.hpp"

namespace cartfact {

ProductCodec::ProductCodec(std::vector<std::size_t> radices)
    : radices_(std::move(radices)), strides_(radices_.size()) {
  total_ = 1;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    strides_[i] = total_;
    total_ *= radices_[i];
  }
}

Vertex ProductCodec::encode(std::span<const std::uint32_t> coords) const {
  std::size_t id = 0;
  for (std::size_t i = 0; i < radices_.size(); ++i) id += coords[i] * strides_[i];
  return static_cast<Vertex>(id);
}

CoordinateVector ProductCodec::decode(Vertex v) const {
  CoordinateVector c(radices_.size());
  std::size_t rest = v;
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    c[i] = static_cast<std::uint32_t>(rest / strides_[i]);
    rest %= strides_[i];
  }
  return c;
}

ProductGraph cartesian_product(std::span<const Graph> factors) {
  if (factors.empty()) throw Error(ErrorCode::EmptyFactor, "product of zero factors");
  std::vector<std::size_t> radices;
  for (const Graph& f : factors) {
    if (f.vertex_count() == 0) throw Error(ErrorCode::EmptyFactor, "factor without vertices");
    radices.push_back(f.vertex_count());
  }
  ProductGraph p;
  p.codec = ProductCodec(std::move(radices));
  const std::size_t n = p.codec.vertex_count();
  p.coordinates.reserve(n);
  for (Vertex v = 0; v < n; ++v) p.coordinates.push_back(p.codec.decode(v));

  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    CoordinateVector c = p.coordinates[v];
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::uint32_t own = c[i];
      for (const Incidence& inc : factors[i].incidences(own)) {
        if (inc.neighbor < own) continue;
        c[i] = inc.neighbor;
        edges.push_back({v, p.codec.encode(c)});
      }
      c[i] = own;
    }
  }
  p.graph = Graph::from_edges(n, edges);
  p.color_of_edge.resize(p.graph.edge_count());
  for (EdgeId e = 0; e < p.graph.edge_count(); ++e) {
    const auto& a = p.coordinates[p.graph.edge(e).u];
    const auto& b = p.coordinates[p.graph.edge(e).v];
    for (std::uint32_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) {
        p.color_of_edge[e] = i;
        break;
      }
    }
  }
  p.colors = EdgePartition::from_labels(p.color_of_edge);
  return p;
}

}  // namespace cartfact
