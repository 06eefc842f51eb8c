#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cartfact/graph.hpp"

namespace cartfact {

/// A 4-cycle v-u-x-w spanned at v by e = (v,u) and f = (v,w) with top x.
struct SquareRecord {
  std::array<Vertex, 4> vertices;  // v, u, x, w
  EdgeId e;
  EdgeId f;
  EdgeId opposite_e;  // (w, x)
  EdgeId opposite_f;  // (u, x)
  bool chordless;     // neither (v,x) nor (u,w) is an edge
};

/// What an incident edge pair (e, f) spans. `chordless` and `unique_top`
/// are meaningful only when count == 1.
struct PairSquareSummary {
  std::uint32_t count = 0;
  Vertex top = 0;
  bool chordless = false;
  bool unique_top = false;

  bool unique_chordless_with_unique_top() const {
    return count == 1 && chordless && unique_top;
  }
};

/// Canonical 4-cycles, each reported once with its smallest vertex as v and
/// u < w. Chorded cycles are included and flagged.
std::vector<SquareRecord> enumerate_squares(const Graph& g);

/// Per-vertex table of square summaries for every incident pair, filled in
/// one O(m * maxdeg) pass. Pair queries are O(log deg) for the neighbor
/// lookups and O(1) otherwise. The graph must outlive the index.
class SquareIndex {
 public:
  explicit SquareIndex(const Graph& g);

  const Graph& graph() const noexcept { return *graph_; }

  /// Throws NotIncident unless e != f share exactly one endpoint.
  PairSquareSummary summary(EdgeId e, EdgeId f) const;

  /// Summary for incidence positions a != b of vertex v.
  const PairSquareSummary& summary_at(Vertex v, std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    const std::size_t d = graph_->degree(v);
    return table_[offsets_[v] + a * d - a * (a + 1) / 2 + (b - a - 1)];
  }

  bool spans_unique_chordless_square(EdgeId e, EdgeId f) const {
    return summary(e, f).unique_chordless_with_unique_top();
  }

 private:
  const Graph* graph_;
  std::vector<std::size_t> offsets_;
  std::vector<PairSquareSummary> table_;
};

/// One-shot helpers that build a throwaway index.
PairSquareSummary pair_summary(const Graph& g, EdgeId e, EdgeId f);
bool spans_unique_chordless_square(const Graph& g, EdgeId e, EdgeId f);

}  // namespace cartfact
