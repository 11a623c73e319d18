#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "ko7/term.hpp"

namespace ko7 {

/// The eight kernel rules, in the order used to sort witness lists.
enum class RuleId : std::uint8_t {
  MergeVoidLeft,   // merge void t -> t
  MergeVoidRight,  // merge t void -> t
  MergeCancel,     // merge t t -> t
  RecZero,         // rec b s void -> b
  RecSucc,         // rec b s (delta n) -> app s (rec b s n)
  IntDelta,        // integrate (delta t) -> void
  EqRefl,          // eqw a a -> void
  EqDiff,          // eqw a b -> integrate (merge a b)
};

inline constexpr std::array<RuleId, 8> kAllRules = {
    RuleId::MergeVoidLeft, RuleId::MergeVoidRight, RuleId::MergeCancel, RuleId::RecZero,
    RuleId::RecSucc,       RuleId::IntDelta,       RuleId::EqRefl,      RuleId::EqDiff};

std::string_view rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);

/// One rewrite event: the subterm of `source` at `position` was contracted by
/// `rule`, giving `result`.
struct StepWitness {
  RuleId rule;
  Position position;
  Term source;
  Term result;

  friend bool operator==(const StepWitness&, const StepWitness&) = default;
};

enum class RelationKind : std::uint8_t { FullRoot, SafeRoot, SafeCtx, FullCtx };

std::string_view relation_name(RelationKind r);
std::optional<RelationKind> relation_from_name(std::string_view name);

/// Unguarded root instances. `eqw a a` yields both eq-refl and eq-diff.
std::vector<StepWitness> root_steps_full(const Term& t);

/// Guarded root instances:
///   merge-void-left/right  deltaFlag(kept operand) = 0
///   merge-cancel           kappaM(t) empty
///   rec-zero               deltaFlag(base) = 0
///   eq-refl                a = b and kappaM(a) empty
///   eq-diff                a != b
std::vector<StepWitness> root_steps_safe(const Term& t);

/// Safe root steps plus safe steps lifted from children of integrate, merge,
/// app and rec nodes. Never descends into delta or eqw.
std::vector<StepWitness> ctx_steps_safe(const Term& t);

/// Unguarded root steps at every position.
std::vector<StepWitness> ctx_steps_full(const Term& t);

/// Dispatches to the enumerator for `relation`. Lists are ordered by
/// (position, rule).
std::vector<StepWitness> steps(const Term& t, RelationKind relation);

}  // namespace ko7
