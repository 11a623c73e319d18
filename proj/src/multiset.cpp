#include "ko7/multiset.hpp"

#include <algorithm>

namespace ko7 {

NatMultiset::NatMultiset(std::initializer_list<Nat> elems) {
  for (Nat e : elems) insert(e);
}

void NatMultiset::insert(Nat value, std::size_t count) {
  if (count == 0) return;
  counts_[value] += count;
  size_ += count;
}

std::size_t NatMultiset::erase(Nat value, std::size_t count) {
  auto it = counts_.find(value);
  if (it == counts_.end()) return 0;
  std::size_t removed = std::min(count, it->second);
  it->second -= removed;
  size_ -= removed;
  if (it->second == 0) counts_.erase(it);
  return removed;
}

std::size_t NatMultiset::count(Nat value) const {
  auto it = counts_.find(value);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<Nat> NatMultiset::elements() const {
  std::vector<Nat> out;
  out.reserve(size_);
  for (const auto& [v, c] : counts_) out.insert(out.end(), c, v);
  return out;
}

bool NatMultiset::is_sub_multiset_of(const NatMultiset& other) const {
  if (size_ > other.size_) return false;
  for (const auto& [v, c] : counts_) {
    if (other.count(v) < c) return false;
  }
  return true;
}

bool NatMultiset::is_strict_sub_multiset_of(const NatMultiset& other) const {
  return size_ < other.size_ && is_sub_multiset_of(other);
}

NatMultiset& NatMultiset::operator+=(const NatMultiset& other) {
  for (const auto& [v, c] : other.counts_) insert(v, c);
  return *this;
}

NatMultiset operator-(const NatMultiset& a, const NatMultiset& b) {
  NatMultiset out = a;
  for (const auto& [v, c] : b.counts_) out.erase(v, c);
  return out;
}

bool dm_less(const NatMultiset& x, const NatMultiset& y) {
  NatMultiset removed = y - x;  // Z
  NatMultiset added = x - y;    // W
  if (removed.empty()) return false;
  if (added.empty()) return true;
  // Every added element must sit below the largest removed one.
  Nat top = removed.counts().rbegin()->first;
  return added.counts().rbegin()->first < top;
}

std::string render(const NatMultiset& m) {
  std::string out = "{";
  bool first = true;
  for (Nat e : m.elements()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(e);
  }
  out += '}';
  return out;
}

}  // namespace ko7
