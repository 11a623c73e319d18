// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

#include "ko7/cli.hpp"
#include "ko7/confluence.hpp"
#include "ko7/measure.hpp"
#include "ko7/nogo.hpp"
#include "ko7/normalize.hpp"

using namespace ko7;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = limit_s <= 0 || secs < limit_s;
  bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (pass ? "[PASS] " : "[FAIL] ") << "AC" << id << " " << title << ": " << o.detail << " ("
       << secs << " s";
  if (limit_s > 0) line << ", limit " << limit_s << " s";
  line << ")";
  if (!in_time) line << " TIME LIMIT EXCEEDED";
  std::cout << line.str() << std::endl;
}

std::string str(std::size_t n) { return std::to_string(n); }

Outcome decrease() {
  DecreaseReport r = check_decrease_sweep(7);
  const auto& by = r.decided_by_rule;
  auto only = [&](RuleId rule, Component c) {
    auto it = by.find(rule);
    if (it == by.end()) return false;
    const auto& counts = it->second;
    auto idx = static_cast<std::size_t>(c);
    std::size_t total = counts[0] + counts[1] + counts[2];
    return total > 0 && counts[idx] == total;
  };
  bool accounting = only(RuleId::RecSucc, Component::DFlag) && only(RuleId::RecZero, Component::KappaM);
  for (RuleId rule : {RuleId::MergeVoidLeft, RuleId::MergeVoidRight, RuleId::MergeCancel,
                      RuleId::EqRefl, RuleId::EqDiff}) {
    accounting = accounting && only(rule, Component::Tau);
  }
  auto id = by.find(RuleId::IntDelta);
  accounting = accounting && id != by.end() && id->second[0] == 0;
  return {r.ok() && accounting && r.checked > 0,
          str(r.checked) + " safe root steps up to size 7, " + str(r.violations.size()) +
              " violations, decided by dflag/kappaM/tau = " + str(r.decided_by[0]) + "/" +
              str(r.decided_by[1]) + "/" + str(r.decided_by[2]) +
              (accounting ? ", per-rule accounting as expected" : ", per-rule accounting MISMATCH")};
}

Outcome normalizer() {
  std::size_t terms = 0, bad = 0, steps = 0;
  for (const Term& t : enumerate(7)) {
    ++terms;
    Trace tr = normalize_safe(t);
    Term cur = t;
    bool ok = tr.source == t;
    for (const TraceStep& s : tr.steps) {
      ok = ok && s.witness.source == cur && s.witness.position.is_root() &&
           s.before == measure3(cur) && s.after == measure3(s.witness.result) &&
           lex3_less(s.after, s.before);
      cur = s.witness.result;
      ++steps;
    }
    ok = ok && cur == tr.normal_form && root_steps_safe(cur).empty();
    if (!ok) ++bad;
  }
  std::size_t id_terms = 0, id_bad = 0;
  for (const Term& t : enumerate(5)) {
    ++id_terms;
    if (normalize_safe(integrate(delta(t))).normal_form != Term()) ++id_bad;
  }
  return {bad == 0 && id_bad == 0,
          str(terms) + " terms normalized (" + str(steps) + " steps), " + str(bad) +
              " bad traces; integrate(delta t) -> void for " + str(id_terms - id_bad) + "/" +
              str(id_terms) + " t"};
}

Outcome nonjoin() {
  NonJoinReport r = non_join_witness_full(1000);
  bool facts = r.refl.result == Term() && r.diff.result == integrate(merge(Term(), Term())) &&
               r.refl_normal_form == Term() && r.diff_normal_form == integrate(Term()) &&
               !is_joined(r.join);
  std::ostringstream out, err;
  int status = cli::run({"witness", "nonjoin"}, out, err);
  std::ifstream in(std::string(KO7_GOLDEN_DIR) + "/witness_nonjoin.txt");
  std::stringstream expected;
  expected << in.rdbuf();
  bool golden = in.good() && status == 0 && out.str() == expected.str();
  return {facts && golden, std::string("void vs (integrate void), not joinable within budget 1000") +
                               (golden ? ", output matches golden file" : ", GOLDEN MISMATCH")};
}

Outcome confluence() {
  LocalJoinReport root = local_join_sweep(6, RelationKind::SafeRoot, 200);
  LocalJoinReport ctx = local_join_sweep(5, RelationKind::SafeCtx, 200);
  UniqueNFReport unf = unique_nf_sweep(7);
  return {root.ok() && ctx.ok() && unf.ok(),
          "safe root <= 6: " + str(root.joined) + "/" + str(root.forks_checked) +
              " forks joined; safe-ctx <= 5: " + str(ctx.joined) + "/" + str(ctx.forks_checked) +
              " joined (budget 200); unique NF <= 7: " + str(unf.unique) + "/" +
              str(unf.terms_checked)};
}

Outcome coverage() {
  CoverageReport r = critical_pair_coverage(7);
  std::size_t realized = 0;
  for (const CoverageRow& row : r.rows) realized += row.realized() ? 1 : 0;
  return {r.ok(), str(realized) + "/8 rows realized with their stated target; vacuous row: " +
                      str(r.vacuous_instances) + " instances, " +
                      str(r.vacuous_with_successors.size()) + " with successors"};
}

Outcome nogo() {
  std::size_t found = 0, total = 0;
  for (const MeasureFamily& f : catalog()) {
    ++total;
    if (find_violation(f, f.relation, 7).found()) ++found;
  }
  std::size_t ties = 0;
  for (Nat k : {Nat{0}, Nat{1}, Nat{5}}) {
    HuntResult h = find_violation(additive_family(k), RelationKind::FullRoot, 7, RuleId::RecSucc);
    if (h.found() && h.counterexample->verdict == Verdict::NoStrictDrop) ++ties;
  }
  PolySearchReport poly = poly_search(3);
  KboSearchReport kbo = kbo_search(3);
  HuntResult canon = find_violation(canonical_family(), RelationKind::SafeRoot, 7);
  bool pass = total == 12 && found == 12 && ties == 3 && poly.orienting == 0 &&
              kbo.orienting == 0 && !canon.found();
  return {pass, str(found) + "/" + str(total) + " families refuted; kappa tie for k in {0,1,5}: " +
                    str(ties) + "/3; poly(3) orienting " + std::to_string(poly.orienting) + " of " +
                    std::to_string(poly.assignments) + "; kbo(3) orienting " +
                    std::to_string(kbo.orienting) + " of " + std::to_string(kbo.assignments) +
                    "; measure3 " + (canon.found() ? "VIOLATED" : "no violation") + " in " +
                    str(canon.instances_checked) + " safe instances"};
}

Outcome lpo() {
  LpoSearchReport five = lpo_search(5);
  LpoSearchReport six = lpo_search(6);
  if (!five.first) return {false, "no precedence orients all rules up to size 5"};
  HuntResult head = find_violation(head_precedence_family(*five.first), RelationKind::FullRoot, 7);
  std::string detail = "LPO orients all 8 rules under " + render(*five.first) + " (" +
                       str(five.orienting) + "/5040 precedences at size 5, " + str(six.orienting) +
                       " at size 6); head rank alone: ";
  detail += head.found() ? std::string(rule_name(head.counterexample->witness.rule)) + " at " +
                               render(head.counterexample->witness.source) + " " +
                               render(head.counterexample->before) + " -> " +
                               render(head.counterexample->after)
                         : "NO COUNTEREXAMPLE";
  return {head.found(), detail};
}

Outcome reachability() {
  std::set<Term> targets;
  for (const Term& c : enumerate(6)) {
    if (is_normal_form_safe(c)) targets.insert(c);
  }
  std::vector<Term> sources = enumerate(5);
  std::vector<std::unordered_set<Term, TermHash>> reach;
  for (const Term& t : sources) {
    Reachable r = reachable_set(t, RelationKind::SafeRoot);
    if (!r.complete) return {false, "reachable set incomplete for " + render(t)};
    reach.emplace_back(r.terms.begin(), r.terms.end());
    for (const Term& u : r.terms) {
      if (is_normal_form_safe(u)) targets.insert(u);
    }
  }
  std::size_t pairs = 0, disagree = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (const Term& c : targets) {
      ++pairs;
      if (reaches_target(sources[i], c) != (reach[i].count(c) == 1)) ++disagree;
    }
  }
  return {disagree == 0, str(pairs) + " (term, normal-form target) pairs, " + str(disagree) +
                             " disagreements with exhaustive reachability"};
}

}  // namespace

int main() {
  criterion(1, "per-step decrease", 60, decrease);
  criterion(2, "normalizer totality and soundness", 60, normalizer);
  criterion(3, "full-relation non-join witness", 0, nonjoin);
  criterion(4, "local confluence and unique normal forms", 120, confluence);
  criterion(5, "root critical-pair coverage", 0, coverage);
  criterion(6, "no-go catalog", 120, nogo);
  criterion(7, "path-order boundary", 0, lpo);
  criterion(8, "fixed-target reachability", 60, reachability);
  std::cout << (failures == 0 ? "all criteria passed" : str(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
