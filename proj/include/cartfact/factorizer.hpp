#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cartfact/coordinatizer.hpp"
#include "cartfact/graph.hpp"
#include "cartfact/product.hpp"

namespace cartfact {

struct Factor {
  std::uint32_t position = 0;
  std::vector<std::uint32_t> labels;  // graph vertex i carries coordinate value labels[i]
  Graph graph;

  std::optional<Vertex> vertex_of(std::uint32_t label) const;
};

struct FactorSet {
  std::size_t dimension = 0;                   // coordinate length
  std::vector<Factor> factors;                 // positions with more than one value
  std::vector<std::uint32_t> dropped_positions;  // single-valued positions (K1 factors)
  std::vector<CoordinateVector> embedding;     // per vertex of H
};

/// Builds one factor per coordinate position: its vertices are the values
/// seen in that position and (a, b) is an edge whenever some edge of H joins
/// vertices whose values there are a != b. Throws InvalidAssignment if the
/// coordinates are not consistent.
FactorSet extract_factors(const CoordinatizedGraph& h);
FactorSet extract_factors(const CoordinateAssignment& ca);

/// Injective, and every edge of h maps to an edge of the product of the
/// factors (differs in one position whose value pair is a factor edge).
bool verify_embedding(const FactorSet& fs, const Graph& h);

/// verify_embedding plus equal vertex and edge counts with the product, so
/// the embedding is an isomorphism.
bool embedding_is_isomorphism(const FactorSet& fs, const Graph& h);

/// Product of the extracted factors.
ProductGraph factor_product(const FactorSet& fs);

}  // namespace cartfact
