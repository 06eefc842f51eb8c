#pragma once

// Brute-force reference implementations used only by the tests. None of
// these share code with the library's square index or union-find.

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cartfact/generators.hpp"
#include "cartfact/graph.hpp"

namespace cartfact::oracle {

/// A 4-cycle a-b-c-d-a found by trying every 4-subset and ordering.
struct FourCycle {
  std::array<Vertex, 4> ring;
  bool chordless;
};

std::vector<FourCycle> four_cycles(const Graph& g);

/// delta built from the explicit 4-cycle list, as (e, f) pairs with e < f.
std::vector<std::pair<EdgeId, EdgeId>> delta_pairs(const Graph& g);

/// Closure by repeated label relaxation; labels are the smallest member.
std::vector<std::uint32_t> closure_labels(std::size_t domain, const std::vector<std::pair<EdgeId, EdgeId>>& pairs);

/// Same set partition, compared pairwise.
bool same_partition(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

std::size_t count_classes(std::span<const std::uint32_t> labels);

/// Floyd-Warshall distances, row-major, kUnreachable when disconnected.
std::vector<std::uint32_t> floyd_warshall(const Graph& g);

/// The shared random corpus: connected G(n, p) with n in [2, 12] and p
/// cycling through 0.2, 0.4, 0.6.
std::vector<Graph> random_corpus(std::size_t count, std::uint64_t seed);

/// Product of 2 or 3 random stars with at most `max_vertices` vertices.
std::vector<Graph> random_star_factors(Rng& rng, std::size_t max_vertices);

/// A random tree or star on 3..8 vertices.
Graph random_small_factor(Rng& rng);

}  // namespace cartfact::oracle
