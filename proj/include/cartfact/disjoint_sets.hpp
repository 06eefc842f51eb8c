#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace cartfact {

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  DisjointSets() = default;
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t add() {
    parent_.push_back(parent_.size());
    size_.push_back(1);
    ++sets_;
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }
  std::size_t element_count() const noexcept { return parent_.size(); }
  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_ = 0;
};

/// Union-find that can undo unions back to a checkpoint. No path
/// compression, so find is O(log n).
class RollbackDisjointSets {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    size_.push_back(1);
    history_.push_back({kAdded, 0});
    ++sets_;
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back({b, a});
    --sets_;
    return true;
  }

  std::size_t checkpoint() const noexcept { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      auto [child, root] = history_.back();
      history_.pop_back();
      if (child == kAdded) {
        parent_.pop_back();
        size_.pop_back();
        --sets_;
      } else {
        parent_[child] = child;
        size_[root] -= size_[child];
        ++sets_;
      }
    }
  }

  std::size_t element_count() const noexcept { return parent_.size(); }
  std::size_t set_count() const noexcept { return sets_; }

 private:
  static constexpr std::size_t kAdded = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::pair<std::size_t, std::size_t>> history_;
  std::size_t sets_ = 0;
};

}  // namespace cartfact
