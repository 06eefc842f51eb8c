#pragma once

#include <cstdint>
#include <random>

#include "cartfact/graph.hpp"

namespace cartfact {

using Rng = std::mt19937_64;

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
/// K(1, leaves) with the center at vertex 0.
Graph make_star(std::size_t leaves);
Graph make_complete(std::size_t n);
Graph make_complete_bipartite(std::size_t a, std::size_t b);
Graph make_hypercube(std::size_t dim);

/// Uniform random labeled tree on n vertices via a Pruefer sequence.
Graph random_tree(std::size_t n, Rng& rng);

/// G(n, p), resampled until connected (at most `attempts` tries, then a
/// random spanning tree is overlaid).
Graph random_connected_gnp(std::size_t n, double p, Rng& rng, int attempts = 200);

/// Applies a vertex permutation: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace cartfact
