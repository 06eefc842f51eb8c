#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "cartfact/edge_partition.hpp"
#include "cartfact/graph.hpp"
#include "cartfact/product.hpp"
#include "cartfact/square_index.hpp"

namespace cartfact {

/// Reflexive symmetric relation on edge ids. Only off-diagonal pairs are
/// stored, as (e, f) with e < f, sorted and unique.
struct EdgeRelation {
  std::size_t domain = 0;
  std::vector<std::pair<EdgeId, EdgeId>> pairs;

  bool contains(EdgeId e, EdgeId f) const;
  void normalize();
};

/// The relation delta computed straight from its definition with an
/// adjacency matrix: incident pairs that do not span exactly one chordless
/// square with a unique top vertex, plus opposite edges of chordless squares.
/// Quadratic in m; intended as a reference oracle.
EdgeRelation delta_oracle(const Graph& g);

/// Finest equivalence on 0..domain-1 containing the pairs.
EdgePartition transitive_closure(std::size_t domain, std::span<const std::pair<EdgeId, EdgeId>> pairs);
EdgePartition transitive_closure(const EdgeRelation& relation);

struct LocalRelation {
  Vertex center = 0;
  EdgeRelation pairs;     // delta pairs touching an edge at the center
  EdgePartition closure;  // their transitive closure over all of E
};

LocalRelation local_relation(const Graph& g, const SquareIndex& index, Vertex v);

struct PartialStarProduct {
  Vertex center = 0;
  std::vector<EdgeId> primal_edges;      // E_v, ascending
  std::vector<EdgeId> nonprimal_edges;   // F_v, ascending
  std::vector<EdgeId> edges;             // E_v and F_v merged, ascending
  std::vector<Vertex> vertices;          // endpoints of `edges`, ascending
  std::vector<Vertex> primal_vertices;   // neighbors of the center, ascending
  EdgePartition classes;                 // local classes over `edges` (index-aligned)

  std::size_t class_count() const noexcept { return classes.class_count(); }

  /// Local class of a host edge contained in the PSP.
  std::uint32_t class_of(EdgeId e) const;
  bool contains_edge(EdgeId e) const;
  bool is_primal(EdgeId e) const;
};

PartialStarProduct build_psp(const Graph& g, const SquareIndex& index, Vertex v);
PartialStarProduct build_psp(const Graph& g, Vertex v);

/// The PSP as a stand-alone graph with maps back to the host.
Subgraph psp_subgraph(const Graph& g, const PartialStarProduct& psp);

struct StarFactor {
  std::uint32_t index = 0;  // local class
  Vertex center = 0;
  std::vector<Vertex> leaves;  // host ids, ascending; leaf j maps to star vertex j+1
  std::vector<EdgeId> edges;   // host ids of the primal edges
};

/// One star per local class, built from the primal edges of that class.
std::vector<StarFactor> star_factors(const PartialStarProduct& psp);

/// The star as a graph with center 0 and leaves 1..l.
Graph star_graph(const StarFactor& star);

struct IsometryReport {
  bool isomorphic_to_2_ball = false;
  bool isometric = false;
  ProductGraph product;                // the product of the stars
  std::vector<Vertex> image;           // PSP subgraph vertex -> product vertex
};

/// Builds the product of the stars, maps the PSP into it (center to the
/// all-zero vertex, primal vertices to unit vectors, each non-primal vertex
/// to the vector with the two entries of its spanning square), and checks
/// the map is an isomorphism onto the closed 2-ball of the all-zero vertex
/// and preserves all pairwise distances. Throws MapConstructionFailed when
/// no such map can be assembled, and TooLarge when the product exceeds
/// `max_product_vertices`.
IsometryReport verify_psp_isometric(const Graph& g, const PartialStarProduct& psp,
                                    std::span<const StarFactor> stars,
                                    std::size_t max_product_vertices = 1u << 20);

/// Primal edges solid, non-primal dashed, colored by local class.
void write_psp_dot(std::ostream& out, const Graph& g, const PartialStarProduct& psp);

}  // namespace cartfact
