#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "ko7/term.hpp"

namespace ko7 {

/// Finite multiset of naturals. Stored as element -> multiplicity with
/// every multiplicity >= 1, so equality ignores insertion order.
class NatMultiset {
 public:
  NatMultiset() = default;
  NatMultiset(std::initializer_list<Nat> elems);

  void insert(Nat value, std::size_t count = 1);
  /// Removes up to `count` copies; returns how many were removed.
  std::size_t erase(Nat value, std::size_t count = 1);

  std::size_t count(Nat value) const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::map<Nat, std::size_t>& counts() const { return counts_; }

  /// Elements in ascending order, repeated by multiplicity.
  std::vector<Nat> elements() const;

  bool is_sub_multiset_of(const NatMultiset& other) const;
  bool is_strict_sub_multiset_of(const NatMultiset& other) const;

  NatMultiset& operator+=(const NatMultiset& other);
  friend NatMultiset operator+(NatMultiset a, const NatMultiset& b) { return a += b; }
  /// Multiset difference (truncated at zero multiplicity).
  friend NatMultiset operator-(const NatMultiset& a, const NatMultiset& b);

  friend bool operator==(const NatMultiset&, const NatMultiset&) = default;

 private:
  std::map<Nat, std::size_t> counts_;
  std::size_t size_ = 0;
};

/// Dershowitz-Manna order over (N, <): x < y iff x != y and x = (y - Z) + W
/// for a nonempty Z where every element of W lies strictly below some
/// element of Z. Decided on the canonical choice Z = y - x, W = x - y.
bool dm_less(const NatMultiset& x, const NatMultiset& y);

std::string render(const NatMultiset& m);

}  // namespace ko7
