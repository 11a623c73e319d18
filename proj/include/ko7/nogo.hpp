#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ko7/measure.hpp"
#include "ko7/multiset.hpp"
#include "ko7/rewrite.hpp"
#include "ko7/term.hpp"

namespace ko7 {

// ---------------------------------------------------------------------------
// Measure families and the counterexample hunter

struct Bit {
  bool value = false;
  friend bool operator==(const Bit&, const Bit&) = default;
};

using NatPair = std::pair<Nat, Nat>;
using Value = std::variant<Bit, Nat, NatPair, NatMultiset, Measure3>;

std::string_view value_kind(const Value& v);
std::string render(const Value& v);

/// A candidate termination measure: a valuation of terms and a strict order
/// on the values.
struct MeasureFamily {
  std::string name;
  int item = 0;  // position in the failed-method list, 0 if not catalogued
  std::string summary;
  std::function<Value(const Term&)> valuation;
  std::function<bool(const Value&, const Value&)> less;
  /// Rule whose instances exhibit the family's failure.
  std::optional<RuleId> focus;
  RelationKind relation = RelationKind::FullRoot;
};

enum class Verdict : std::uint8_t { NoStrictDrop, Increase };

std::string_view verdict_name(Verdict v);

struct CounterexampleReport {
  std::string family;
  StepWitness witness;
  Value before;
  Value after;
  Verdict verdict = Verdict::NoStrictDrop;
};

struct HuntResult {
  std::string family;
  RelationKind relation = RelationKind::FullRoot;
  std::size_t max_size = 0;
  std::optional<RuleId> only;
  std::size_t instances_checked = 0;
  std::optional<CounterexampleReport> counterexample;

  bool found() const { return counterexample.has_value(); }
};

/// Scans every rule instance of `relation` over terms up to `max_size`
/// (restricted to rule `only` when given). Reports the first instance whose
/// value strictly increases, or failing that the first without a strict
/// drop.
HuntResult find_violation(const MeasureFamily& family, RelationKind relation,
                          std::size_t max_size, std::optional<RuleId> only = std::nullopt);

/// Delta-nesting depth; every other constructor takes the max of its
/// children.
Nat kappa_depth(const Term& t);

/// Height of the tree; void has depth 1.
Nat tree_depth(const Term& t);

/// Total order on the seven constructors, greatest first.
struct Precedence {
  std::array<Kind, 7> order;

  /// 6 for the greatest symbol, 0 for the least.
  unsigned rank(Kind k) const;
  bool greater(Kind a, Kind b) const { return rank(a) > rank(b); }

  friend bool operator==(const Precedence&, const Precedence&) = default;
};

/// eqw > rec > app > merge > integrate > delta > void.
Precedence constructor_precedence();

std::string render(const Precedence& p);

MeasureFamily additive_family(Nat k);
MeasureFamily head_precedence_family(const Precedence& prec);

/// measure3 under lex3_less on the safe root relation.
MeasureFamily canonical_family();

/// The twelve executable failed-method families.
std::vector<MeasureFamily> catalog();

/// Catalog lookup by name; also accepts "measure3" for the canonical family.
std::optional<MeasureFamily> family_by_name(std::string_view name);

// ---------------------------------------------------------------------------
// Duplication stress

struct StressReport {
  std::size_t max_size = 0;
  std::size_t instances = 0;
  /// Fitted form: size(result) - size(source) = slope * size(s) + intercept.
  long long slope = 0;
  long long intercept = 0;
  bool exact_fit = false;
  /// Instances satisfying size(result) = size(source) - 1 + size(s).
  std::size_t textbook_form_holds = 0;
  /// Instances where size(result) < size(source).
  std::size_t strict_drops = 0;
  std::vector<std::pair<std::size_t, long long>> samples;  // (size(s), difference)
};

/// Fits the size change across every rec-succ instance up to `max_size`.
StressReport duplication_stress_check(std::size_t max_size);

// ---------------------------------------------------------------------------
// Lexicographic path order

bool lpo_greater(const Term& a, const Term& b, const Precedence& prec);

/// True iff lhs >lpo rhs for every full root instance over terms up to
/// `max_size`.
bool lpo_orients(const Precedence& prec, std::size_t max_size);

struct LpoSearchReport {
  std::size_t max_size = 0;
  std::size_t instances = 0;
  std::size_t precedences_checked = 0;
  std::size_t orienting = 0;
  std::optional<Precedence> first;
};

/// Scans all 5040 precedences in lexicographic order of `order`.
LpoSearchReport lpo_search(std::size_t max_size = 5);
std::optional<Precedence> search_precedence(std::size_t max_size = 5);

// ---------------------------------------------------------------------------
// Linear interpretations and symbol weights

/// M(f(x1..xn)) = constant[f] + sum_i coef[f][i] * M(xi).
struct LinearInterpretation {
  std::array<Nat, 7> constant{};
  std::array<std::array<Nat, 3>, 7> coef{};

  Nat eval(const Term& t) const;
};

std::string render(const LinearInterpretation& m);

/// weight(t) = sum of symbol weights over all nodes.
struct WeightAssignment {
  std::array<Nat, 7> weight{};

  Nat eval(const Term& t) const;
};

std::string render(const WeightAssignment& w);

/// A rec-succ instance whose value does not strictly drop.
struct OrientationFailure {
  StepWitness witness;
  Nat lhs = 0;
  Nat rhs = 0;
  bool pumped = false;  // found by growing the step operand past the scan
};

/// Scans rec-succ instances up to `scan_size` (optionally only those built
/// from void/delta/app/rec), then grows the step operand until the rule
/// fails. nullopt means no failure was found within the growth cap.
std::optional<OrientationFailure> recsucc_failure(const LinearInterpretation& m,
                                                  std::size_t scan_size,
                                                  bool fragment_only = false);
std::optional<OrientationFailure> recsucc_failure(const WeightAssignment& w,
                                                  std::size_t scan_size);

struct PolySearchReport {
  Nat coef_bound = 0;
  std::size_t scan_size = 0;
  std::uint64_t assignments = 0;
  std::uint64_t classes = 0;  // distinct void/delta/app/rec parameter choices
  std::uint64_t orienting = 0;
  std::uint64_t failed_in_scan = 0;  // classes
  std::uint64_t failed_by_growth = 0;
  std::size_t largest_witness = 0;
  /// Classes where the step operand's coefficient on the right exceeds the
  /// one on the left.
  std::uint64_t rhs_coefficient_exceeds = 0;
  std::vector<std::pair<LinearInterpretation, OrientationFailure>> examples;
};

/// Exhaustive search over linear interpretations with child coefficients in
/// [1, bound] and constants in [0, bound]. Witnesses use only void, delta,
/// app and rec, so each covers every choice for the other three symbols.
PolySearchReport poly_search(Nat coef_bound, std::size_t scan_size = 6);

struct KboSearchReport {
  Nat weight_bound = 0;
  std::size_t scan_size = 0;
  std::uint64_t assignments = 0;
  std::uint64_t orienting = 0;
  std::uint64_t failed_in_scan = 0;
  std::uint64_t failed_by_growth = 0;
  std::size_t largest_witness = 0;
  std::vector<std::pair<WeightAssignment, OrientationFailure>> examples;
};

/// Exhaustive search over symbol weights in [0, bound].
KboSearchReport kbo_search(Nat weight_bound, std::size_t scan_size = 6);

}  // namespace ko7
