#pragma once

#include "cartfact/graph.hpp"

namespace cartfact {

inline constexpr std::size_t kSmallIsomorphismLimit = 10;

/// Exact isomorphism test by backtracking over degree-compatible candidates.
/// Throws TooLarge above kSmallIsomorphismLimit vertices.
bool isomorphism_check_small(const Graph& a, const Graph& b);

}  // namespace cartfact
