#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ko7/normalize.hpp"
#include "ko7/rewrite.hpp"
#include "ko7/term.hpp"

namespace ko7 {

/// Two distinct one-step reductions of the same source.
struct Fork {
  Term source;
  StepWitness left;
  StepWitness right;
};

/// All unordered pairs of distinct witnesses of `relation` at t.
std::vector<Fork> forks(const Term& t, RelationKind relation);

struct Joined {
  Term common;
  std::vector<StepWitness> left_path;
  std::vector<StepWitness> right_path;
};

struct NotJoined {
  std::size_t budget_used = 0;
};

using JoinResult = std::variant<Joined, NotJoined>;

inline bool is_joined(const JoinResult& r) { return std::holds_alternative<Joined>(r); }

/// Breadth-first search from both sides, expanding at most `budget` terms per
/// side. Returns the first common reduct discovered along with both paths.
JoinResult joinable(const Term& u, const Term& v, RelationKind relation, std::size_t budget);

struct Reachable {
  std::vector<Term> terms;  // BFS order, starting with the source
  bool complete = true;     // false if `limit` cut the search short
};

/// Every term reachable from t (including t), up to `limit` terms.
Reachable reachable_set(const Term& t, RelationKind relation, std::size_t limit = 1'000'000);

/// Terminal terms of reachable_set, in BFS order.
std::vector<Term> normal_forms(const Term& t, RelationKind relation);

struct ForkCase {
  Fork fork;
  std::size_t budget_used = 0;
};

struct LocalJoinReport {
  RelationKind relation = RelationKind::SafeRoot;
  std::size_t max_size = 0;
  std::size_t budget = 0;
  std::size_t terms_checked = 0;
  std::size_t forks_checked = 0;
  std::size_t joined = 0;
  std::vector<ForkCase> inconclusive;  // SafeCtx forks not joined within budget
  std::vector<ForkCase> violations;    // SafeRoot forks not joined

  bool ok() const { return inconclusive.empty() && violations.empty(); }
};

/// Runs joinable on both results of every fork of every term up to
/// `max_size`. `relation` must be SafeRoot or SafeCtx.
LocalJoinReport local_join_sweep(std::size_t max_size, RelationKind relation, std::size_t budget);

struct UniqueNFViolation {
  Term source;
  std::vector<Term> normal_forms;
  Term normalizer_result;
};

struct UniqueNFReport {
  std::size_t max_size = 0;
  std::size_t terms_checked = 0;
  std::size_t unique = 0;
  std::vector<UniqueNFViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// For every term up to `max_size`, explores all safe root reduction orders
/// and checks there is exactly one normal form, equal to normalize_safe's.
UniqueNFReport unique_nf_sweep(std::size_t max_size);

/// One row of the root critical-pair table: a source shape and its expected
/// unique safe target.
struct CoverageRow {
  std::string shape;
  std::string target;
  std::size_t instances = 0;  // shape matched and some safe step applied
  std::size_t matched = 0;    // successor set was exactly {target}
  std::size_t blocked = 0;    // shape matched but guards blocked every rule
  std::vector<Term> mismatches;
  std::optional<Term> example;

  bool realized() const { return matched > 0 && mismatches.empty(); }
};

struct CoverageReport {
  std::size_t max_size = 0;
  std::array<CoverageRow, 8> rows;
  /// eqw a a with kappaM(a) nonempty: both equality rules blocked.
  std::size_t vacuous_instances = 0;
  std::vector<Term> vacuous_with_successors;

  bool ok() const;
};

CoverageReport critical_pair_coverage(std::size_t max_size);

struct NonJoinReport {
  Term source;
  StepWitness refl;
  StepWitness diff;
  FullRunResult refl_run;
  FullRunResult diff_run;
  Term refl_normal_form;
  Term diff_normal_form;
  std::size_t budget = 0;
  JoinResult join;
};

/// The full-relation fork at `eqw void void`: eq-refl gives void, eq-diff
/// gives (integrate (merge void void)) which normalizes to (integrate void).
/// Throws std::logic_error if the two sides turn out to be joinable.
NonJoinReport non_join_witness_full(std::size_t budget = 1000, std::size_t fuel = kDefaultFuel);

}  // namespace ko7
