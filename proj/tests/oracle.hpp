#pragma once

// Reference implementations written directly from the rule table, kept apart
// from the engine so the two can be compared term by term.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ko7/term.hpp"

namespace oracle {

using ko7::Kind;
using ko7::Nat;
using ko7::Term;

inline std::size_t size(const Term& t) {
  std::size_t n = 1;
  for (const Term& c : t.children()) n += oracle::size(c);
  return n;
}

inline Nat tau(const Term& t) {
  Nat n = t.is(Kind::EqW) ? 3 : 1;
  for (const Term& c : t.children()) n += oracle::tau(c);
  return n;
}

using Bag = std::map<Nat, int>;

inline void collect_kappa(const Term& t, Bag& out) {
  if (t.is(Kind::RecD)) ++out[oracle::tau(t)];
  for (const Term& c : t.children()) oracle::collect_kappa(c, out);
}

inline Bag kappa(const Term& t) {
  Bag b;
  collect_kappa(t, b);
  return b;
}

inline unsigned dflag(const Term& t) {
  return t.is(Kind::RecD) && t.child(2).is(Kind::Delta) ? 1 : 0;
}

inline int count_of(const Bag& b, Nat e) {
  auto it = b.find(e);
  return it == b.end() ? 0 : it->second;
}

// Huet-Oppen form of the multiset extension: x < y iff x != y and every
// element in excess in x is dominated by some element in excess in y.
inline bool dm_less(const Bag& x, const Bag& y) {
  if (x == y) return false;
  for (const auto& [e, n] : x) {
    if (n <= count_of(y, e)) continue;
    bool dominated = false;
    for (const auto& [f, m] : y) {
      if (f > e && m > count_of(x, f)) dominated = true;
    }
    if (!dominated) return false;
  }
  return true;
}

// Number of terms of exactly size n by the arity recurrence.
inline std::vector<unsigned long long> term_counts(std::size_t max) {
  std::vector<unsigned long long> t(max + 1, 0);
  if (max >= 1) t[1] = 1;
  for (std::size_t n = 2; n <= max; ++n) {
    unsigned long long v = 2 * t[n - 1];
    for (std::size_t i = 1; i + 1 < n; ++i) v += 3 * t[i] * t[n - 1 - i];
    for (std::size_t i = 1; i + 2 < n; ++i) {
      for (std::size_t j = 1; i + j + 1 < n; ++j) v += t[i] * t[j] * t[n - 1 - i - j];
    }
    t[n] = v;
  }
  return t;
}

struct Reduct {
  std::string rule;
  Term result;
  friend bool operator<(const Reduct& a, const Reduct& b) {
    if (a.rule != b.rule) return a.rule < b.rule;
    return a.result < b.result;
  }
  friend bool operator==(const Reduct& a, const Reduct& b) = default;
};

// Root reducts by direct pattern matching on the rule table. With `safe`,
// the guards are applied.
inline std::vector<Reduct> root_reducts(const Term& t, bool safe) {
  std::vector<Reduct> out;
  const Term v;
  switch (t.kind()) {
    case Kind::Merge: {
      const Term& a = t.child(0);
      const Term& b = t.child(1);
      if (a == v && (!safe || dflag(b) == 0)) out.push_back({"merge-void-left", b});
      if (b == v && (!safe || dflag(a) == 0)) out.push_back({"merge-void-right", a});
      if (a == b && (!safe || kappa(a).empty())) out.push_back({"merge-cancel", a});
      break;
    }
    case Kind::RecD: {
      const Term& b = t.child(0);
      const Term& s = t.child(1);
      const Term& n = t.child(2);
      if (n == v && (!safe || dflag(b) == 0)) out.push_back({"rec-zero", b});
      if (n.is(Kind::Delta)) out.push_back({"rec-succ", ko7::app(s, ko7::rec(b, s, n.child(0)))});
      break;
    }
    case Kind::Integrate:
      if (t.child(0).is(Kind::Delta)) out.push_back({"int-delta", v});
      break;
    case Kind::EqW: {
      const Term& a = t.child(0);
      const Term& b = t.child(1);
      if (a == b && (!safe || kappa(a).empty())) out.push_back({"eq-refl", v});
      if (!safe || a != b) out.push_back({"eq-diff", ko7::integrate(ko7::merge(a, b))});
      break;
    }
    default:
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random term of exactly `n` nodes (n >= 1), split uniformly over shapes.
inline Term random_term(std::size_t n, std::mt19937& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  if (n == 1) return Term();
  std::vector<Kind> options{Kind::Delta, Kind::Integrate};
  if (n >= 3) options.insert(options.end(), {Kind::Merge, Kind::App, Kind::EqW});
  if (n >= 4) options.push_back(Kind::RecD);
  Kind k = options[pick(0, options.size() - 1)];
  std::size_t rest = n - 1;
  switch (ko7::arity(k)) {
    case 1:
      return Term::make(k, {random_term(rest, rng)});
    case 2: {
      std::size_t l = pick(1, rest - 1);
      return Term::make(k, {random_term(l, rng), random_term(rest - l, rng)});
    }
    default: {
      std::size_t a = pick(1, rest - 2);
      std::size_t b = pick(1, rest - a - 1);
      return Term::make(k, {random_term(a, rng), random_term(b, rng), random_term(rest - a - b, rng)});
    }
  }
}

}  // namespace oracle
