#include "cartfact/edge_partition.hpp"

#include <algorithm>
#include <limits>

namespace cartfact {

namespace {
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
}

EdgePartition EdgePartition::from_labels(std::span<const std::uint32_t> raw) {
  EdgePartition p;
  p.labels_.resize(raw.size());
  std::vector<std::uint32_t> remap;
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] >= remap.size()) remap.resize(raw[i] + 1, kUnset);
    if (remap[raw[i]] == kUnset) remap[raw[i]] = next++;
    p.labels_[i] = remap[raw[i]];
  }
  p.offsets_.assign(next + 1, 0);
  for (std::uint32_t l : p.labels_) ++p.offsets_[l + 1];
  for (std::uint32_t c = 0; c < next; ++c) p.offsets_[c + 1] += p.offsets_[c];
  p.members_.resize(raw.size());
  std::vector<std::size_t> fill(p.offsets_.begin(), p.offsets_.end() - 1);
  for (std::size_t i = 0; i < raw.size(); ++i) p.members_[fill[p.labels_[i]]++] = static_cast<std::uint32_t>(i);
  return p;
}

EdgePartition EdgePartition::from_sets(DisjointSets& sets) {
  std::vector<std::uint32_t> raw(sets.element_count());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = static_cast<std::uint32_t>(sets.find(i));
  return from_labels(raw);
}

EdgePartition EdgePartition::singletons(std::size_t size) {
  std::vector<std::uint32_t> raw(size);
  for (std::size_t i = 0; i < size; ++i) raw[i] = static_cast<std::uint32_t>(i);
  return from_labels(raw);
}

EdgePartition EdgePartition::single_class(std::size_t size) {
  std::vector<std::uint32_t> raw(size, 0);
  return from_labels(raw);
}

EdgePartition EdgePartition::merged(std::uint32_t a, std::uint32_t b) const {
  std::vector<std::uint32_t> raw(labels_.begin(), labels_.end());
  for (auto& l : raw) {
    if (l == b) l = a;
  }
  return from_labels(raw);
}

bool EdgePartition::refines(const EdgePartition& other) const {
  if (other.size() != size()) return false;
  for (std::uint32_t c = 0; c < class_count(); ++c) {
    auto m = members(c);
    for (std::uint32_t x : m) {
      if (other.class_of(x) != other.class_of(m.front())) return false;
    }
  }
  return true;
}

}  // namespace cartfact
