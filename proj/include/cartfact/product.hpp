#pragma once

#include <span>
#include <vector>

#include "cartfact/edge_partition.hpp"
#include "cartfact/graph.hpp"

namespace cartfact {

using CoordinateVector = std::vector<std::uint32_t>;

/// Mixed-radix codec for product vertex ids, row-major (last factor fastest).
class ProductCodec {
 public:
  ProductCodec() = default;
  explicit ProductCodec(std::vector<std::size_t> radices);

  std::size_t dimension() const noexcept { return radices_.size(); }
  std::size_t vertex_count() const noexcept { return total_; }
  std::span<const std::size_t> radices() const noexcept { return radices_; }

  Vertex encode(std::span<const std::uint32_t> coords) const;
  CoordinateVector decode(Vertex v) const;

 private:
  std::vector<std::size_t> radices_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 0;
};

struct ProductGraph {
  Graph graph;
  ProductCodec codec;
  std::vector<CoordinateVector> coordinates;  // per vertex
  EdgePartition colors;                       // per edge: the differing position
  std::vector<std::uint32_t> color_of_edge;   // raw position index per edge
};

/// Cartesian product of the factors. Throws EmptyFactor on an empty factor
/// list or a factor without vertices.
ProductGraph cartesian_product(std::span<const Graph> factors);

}  // namespace cartfact
