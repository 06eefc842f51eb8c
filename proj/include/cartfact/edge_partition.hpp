#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cartfact/disjoint_sets.hpp"

namespace cartfact {

/// Equivalence relation over a dense domain 0..size-1 (usually edge ids).
///
/// Labels are canonical: classes are numbered in order of their smallest
/// member, so two partitions are equal as set partitions iff their label
/// vectors are equal.
class EdgePartition {
 public:
  EdgePartition() = default;

  /// Accepts arbitrary raw labels and canonicalizes them.
  static EdgePartition from_labels(std::span<const std::uint32_t> raw);
  static EdgePartition from_sets(DisjointSets& sets);
  static EdgePartition singletons(std::size_t size);
  static EdgePartition single_class(std::size_t size);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t class_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::uint32_t class_of(std::size_t element) const { return labels_[element]; }
  std::span<const std::uint32_t> labels() const noexcept { return labels_; }

  /// Members of class c, ascending.
  std::span<const std::uint32_t> members(std::uint32_t c) const {
    return {members_.data() + offsets_[c], members_.data() + offsets_[c + 1]};
  }

  /// Union of two classes, recanonicalized.
  EdgePartition merged(std::uint32_t a, std::uint32_t b) const;

  /// True if every class of *this is contained in a class of other.
  bool refines(const EdgePartition& other) const;

  friend bool operator==(const EdgePartition& a, const EdgePartition& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint32_t> members_;
  std::vector<std::size_t> offsets_;
};

}  // namespace cartfact
