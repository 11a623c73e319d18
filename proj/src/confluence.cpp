#include "ko7/confluence.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ko7/measure.hpp"
#include "ko7/parallel.hpp"

namespace ko7 {

std::vector<Fork> forks(const Term& t, RelationKind relation) {
  std::vector<StepWitness> ws = steps(t, relation);
  std::vector<Fork> out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) out.push_back(Fork{t, ws[i], ws[j]});
  }
  return out;
}

namespace {

// One half of the bidirectional search. `parent` maps each discovered term to
// the step that first reached it (nullopt for the start).
struct SearchSide {
  std::unordered_map<Term, std::optional<StepWitness>, TermHash> parent;
  std::deque<Term> frontier;
  std::size_t expanded = 0;

  explicit SearchSide(const Term& start) {
    parent.emplace(start, std::nullopt);
    frontier.push_back(start);
  }

  bool can_expand(std::size_t budget) const { return !frontier.empty() && expanded < budget; }

  std::vector<StepWitness> path_to(const Term& target) const {
    std::vector<StepWitness> path;
    Term cur = target;
    for (;;) {
      const auto& p = parent.at(cur);
      if (!p) break;
      path.push_back(*p);
      cur = p->source;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }
};

}  // namespace

JoinResult joinable(const Term& u, const Term& v, RelationKind relation, std::size_t budget) {
  if (u == v) return Joined{u, {}, {}};
  SearchSide left(u);
  SearchSide right(v);
  // Returns the common term if expanding `side` discovers one.
  auto expand = [&](SearchSide& side, const SearchSide& other) -> std::optional<Term> {
    Term cur = side.frontier.front();
    side.frontier.pop_front();
    ++side.expanded;
    for (StepWitness& w : steps(cur, relation)) {
      if (side.parent.count(w.result)) continue;
      Term next = w.result;
      side.parent.emplace(next, std::move(w));
      if (other.parent.count(next)) return next;
      side.frontier.push_back(next);
    }
    return std::nullopt;
  };
  while (left.can_expand(budget) || right.can_expand(budget)) {
    if (left.can_expand(budget)) {
      if (auto c = expand(left, right)) return Joined{*c, left.path_to(*c), right.path_to(*c)};
    }
    if (right.can_expand(budget)) {
      if (auto c = expand(right, left)) return Joined{*c, left.path_to(*c), right.path_to(*c)};
    }
  }
  return NotJoined{left.expanded + right.expanded};
}

Reachable reachable_set(const Term& t, RelationKind relation, std::size_t limit) {
  Reachable out;
  std::unordered_set<Term, TermHash> seen{t};
  out.terms.push_back(t);
  for (std::size_t i = 0; i < out.terms.size(); ++i) {
    Term cur = out.terms[i];
    for (const StepWitness& w : steps(cur, relation)) {
      if (!seen.insert(w.result).second) continue;
      if (out.terms.size() >= limit) {
        out.complete = false;
        return out;
      }
      out.terms.push_back(w.result);
    }
  }
  return out;
}

std::vector<Term> normal_forms(const Term& t, RelationKind relation) {
  std::vector<Term> out;
  for (const Term& r : reachable_set(t, relation).terms) {
    if (steps(r, relation).empty()) out.push_back(r);
  }
  return out;
}

LocalJoinReport local_join_sweep(std::size_t max_size, RelationKind relation,
                                 std::size_t budget) {
  if (relation != RelationKind::SafeRoot && relation != RelationKind::SafeCtx) {
    throw std::invalid_argument("local-join sweep is defined for safe and safe-ctx only");
  }
  const std::vector<Term> terms = enumerate(max_size);
  auto partial = parallel_map(terms.size(), [&](std::size_t i) {
    LocalJoinReport r;
    for (Fork& f : forks(terms[i], relation)) {
      ++r.forks_checked;
      JoinResult jr = joinable(f.left.result, f.right.result, relation, budget);
      if (is_joined(jr)) {
        ++r.joined;
        continue;
      }
      ForkCase fc{std::move(f), std::get<NotJoined>(jr).budget_used};
      if (relation == RelationKind::SafeRoot) {
        r.violations.push_back(std::move(fc));
      } else {
        r.inconclusive.push_back(std::move(fc));
      }
    }
    return r;
  });
  LocalJoinReport report;
  report.relation = relation;
  report.max_size = max_size;
  report.budget = budget;
  report.terms_checked = terms.size();
  for (auto& r : partial) {
    report.forks_checked += r.forks_checked;
    report.joined += r.joined;
    for (auto& c : r.inconclusive) report.inconclusive.push_back(std::move(c));
    for (auto& c : r.violations) report.violations.push_back(std::move(c));
  }
  return report;
}

UniqueNFReport unique_nf_sweep(std::size_t max_size) {
  const std::vector<Term> terms = enumerate(max_size);
  auto partial = parallel_map(terms.size(), [&](std::size_t i) -> std::optional<UniqueNFViolation> {
    const Term& t = terms[i];
    std::vector<Term> nfs = normal_forms(t, RelationKind::SafeRoot);
    Term via_normalizer = normalize_safe(t).normal_form;
    if (nfs.size() == 1 && nfs.front() == via_normalizer) return std::nullopt;
    return UniqueNFViolation{t, std::move(nfs), via_normalizer};
  });
  UniqueNFReport report;
  report.max_size = max_size;
  report.terms_checked = terms.size();
  for (auto& v : partial) {
    if (v) {
      report.violations.push_back(std::move(*v));
    } else {
      ++report.unique;
    }
  }
  return report;
}

namespace {

struct RowSpec {
  const char* shape;
  const char* target;
  std::function<bool(const Term&)> matches;
  std::function<Term(const Term&)> expected;
};

const std::array<RowSpec, 8>& row_specs() {
  static const std::array<RowSpec, 8> specs = {{
      {"(integrate (delta t))", "void",
       [](const Term& t) { return t.is(Kind::Integrate) && t.child(0).is(Kind::Delta); },
       [](const Term&) { return Term(); }},
      {"(merge void t)", "t",
       [](const Term& t) { return t.is(Kind::Merge) && t.child(0).is(Kind::Void); },
       [](const Term& t) { return t.child(1); }},
      {"(merge t void)", "t",
       [](const Term& t) { return t.is(Kind::Merge) && t.child(1).is(Kind::Void); },
       [](const Term& t) { return t.child(0); }},
      {"(merge t t)", "t",
       [](const Term& t) { return t.is(Kind::Merge) && t.child(0) == t.child(1); },
       [](const Term& t) { return t.child(0); }},
      {"(rec b s void)", "b",
       [](const Term& t) { return t.is(Kind::RecD) && t.child(2).is(Kind::Void); },
       [](const Term& t) { return t.child(0); }},
      {"(rec b s (delta n))", "(app s (rec b s n))",
       [](const Term& t) { return t.is(Kind::RecD) && t.child(2).is(Kind::Delta); },
       [](const Term& t) {
         return app(t.child(1), rec(t.child(0), t.child(1), t.child(2).child(0)));
       }},
      {"(eqw a b), a != b", "(integrate (merge a b))",
       [](const Term& t) { return t.is(Kind::EqW) && !(t.child(0) == t.child(1)); },
       [](const Term& t) { return integrate(merge(t.child(0), t.child(1))); }},
      {"(eqw a a), kappaM(a) empty", "void",
       [](const Term& t) {
         return t.is(Kind::EqW) && t.child(0) == t.child(1) && kappa_m_empty(t.child(0));
       },
       [](const Term&) { return Term(); }},
  }};
  return specs;
}

}  // namespace

bool CoverageReport::ok() const {
  for (const CoverageRow& r : rows) {
    if (!r.realized()) return false;
  }
  return vacuous_instances > 0 && vacuous_with_successors.empty();
}

CoverageReport critical_pair_coverage(std::size_t max_size) {
  CoverageReport report;
  report.max_size = max_size;
  const auto& specs = row_specs();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    report.rows[i].shape = specs[i].shape;
    report.rows[i].target = specs[i].target;
  }
  for (const Term& t : enumerate(max_size)) {
    std::vector<StepWitness> ws = root_steps_safe(t);
    std::vector<Term> results;
    for (const StepWitness& w : ws) {
      if (std::find(results.begin(), results.end(), w.result) == results.end()) {
        results.push_back(w.result);
      }
    }
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (!specs[i].matches(t)) continue;
      CoverageRow& row = report.rows[i];
      if (results.empty()) {
        ++row.blocked;
        continue;
      }
      ++row.instances;
      if (results.size() == 1 && results.front() == specs[i].expected(t)) {
        ++row.matched;
        if (!row.example) row.example = t;
      } else {
        row.mismatches.push_back(t);
      }
    }
  }
  // eqw a a for every a in range with nonempty kappaM.
  for (const Term& a : enumerate(max_size)) {
    if (kappa_m_empty(a)) continue;
    Term t = eqw(a, a);
    ++report.vacuous_instances;
    if (!root_steps_safe(t).empty()) report.vacuous_with_successors.push_back(t);
  }
  return report;
}

NonJoinReport non_join_witness_full(std::size_t budget, std::size_t fuel) {
  const Term source = eqw(Term(), Term());
  std::vector<StepWitness> ws = root_steps_full(source);
  auto find = [&](RuleId r) -> const StepWitness& {
    for (const StepWitness& w : ws) {
      if (w.rule == r) return w;
    }
    throw std::logic_error("expected " + std::string(rule_name(r)) + " at eqw void void");
  };
  NonJoinReport report{source,
                       find(RuleId::EqRefl),
                       find(RuleId::EqDiff),
                       normalize_full(find(RuleId::EqRefl).result, fuel),
                       normalize_full(find(RuleId::EqDiff).result, fuel),
                       Term(),
                       Term(),
                       budget,
                       NotJoined{}};
  auto nf = [](const FullRunResult& r) {
    if (const auto* n = std::get_if<FullNormalized>(&r)) return n->normal_form;
    throw std::logic_error("full normalization ran out of fuel");
  };
  report.refl_normal_form = nf(report.refl_run);
  report.diff_normal_form = nf(report.diff_run);
  report.join = joinable(report.refl.result, report.diff.result, RelationKind::FullCtx, budget);
  if (is_joined(report.join) || report.refl_normal_form == report.diff_normal_form) {
    throw std::logic_error("eqw void void fork unexpectedly joins");
  }
  return report;
}

}  // namespace ko7
