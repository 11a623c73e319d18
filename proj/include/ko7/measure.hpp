#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ko7/multiset.hpp"
#include "ko7/rewrite.hpp"
#include "ko7/term.hpp"

namespace ko7 {

/// 1 iff t is `rec _ _ (delta _)` at the root.
unsigned delta_flag(const Term& t);

/// Weighted node count: every node weighs 1 except eqw, which weighs 3.
Nat tau(const Term& t);

/// { tau(u) : u a rec-rooted subterm occurrence of t }.
NatMultiset kappa_m(const Term& t);

/// True iff t has no rec node, i.e. kappa_m(t) is empty.
bool kappa_m_empty(const Term& t);

struct Measure3 {
  unsigned dflag = 0;
  NatMultiset kappa;
  Nat tau = 1;

  friend bool operator==(const Measure3&, const Measure3&) = default;
};

Measure3 measure3(const Term& t);

/// Strict lexicographic order: dflag by <, kappa by DM, tau by <.
bool lex3_less(const Measure3& a, const Measure3& b);

enum class Component : std::uint8_t { DFlag, KappaM, Tau };

std::string_view component_name(Component c);

/// Which component makes `after` strictly below `before`, or nullopt when
/// lex3_less(after, before) fails.
std::optional<Component> deciding_component(const Measure3& before, const Measure3& after);

std::string render(const Measure3& m);

struct DecreaseViolation {
  StepWitness witness;
  Measure3 before;
  Measure3 after;
};

struct DecreaseReport {
  std::size_t max_size = 0;
  std::size_t checked = 0;
  std::vector<DecreaseViolation> violations;
  std::array<std::size_t, 3> decided_by{};  // indexed by Component
  std::map<RuleId, std::array<std::size_t, 3>> decided_by_rule;

  bool ok() const { return violations.empty(); }
};

/// Checks lex3_less(measure3(result), measure3(source)) for every safe root
/// step of every term up to `max_size`.
DecreaseReport check_decrease_sweep(std::size_t max_size);

}  // namespace ko7
