#include "ko7/json.hpp"

#include <stdexcept>

namespace ko7 {

void to_json(json& j, const Term& t) {
  json kids = json::array();
  for (const Term& c : t.children()) kids.push_back(c);
  j = json{{"k", keyword(t.kind())}, {"c", std::move(kids)}};
}

void from_json(const json& j, Term& t) {
  Kind k;
  const auto name = j.at("k").get<std::string>();
  if (!kind_from_keyword(name, k)) throw std::invalid_argument("unknown constructor '" + name + "'");
  std::vector<Term> kids;
  if (j.contains("c")) {
    for (const json& c : j.at("c")) kids.push_back(c.get<Term>());
  }
  t = Term::make(k, std::move(kids));
}

void to_json(json& j, const Position& p) { j = p.path; }
void from_json(const json& j, Position& p) { p.path = j.get<std::vector<std::size_t>>(); }

void to_json(json& j, const StepWitness& w) {
  j = json{{"rule", rule_name(w.rule)}, {"pos", w.position}, {"from", w.source}, {"to", w.result}};
}

void from_json(const json& j, StepWitness& w) {
  const auto name = j.at("rule").get<std::string>();
  auto rule = rule_from_name(name);
  if (!rule) throw std::invalid_argument("unknown rule '" + name + "'");
  w.rule = *rule;
  w.position = j.at("pos").get<Position>();
  w.source = j.at("from").get<Term>();
  w.result = j.at("to").get<Term>();
}

void to_json(json& j, const NatMultiset& m) { j = m.elements(); }

void from_json(const json& j, NatMultiset& m) {
  m = NatMultiset{};
  for (const json& e : j) m.insert(e.get<Nat>());
}

void to_json(json& j, const Measure3& m) { j = json::array({m.dflag, m.kappa, m.tau}); }

void from_json(const json& j, Measure3& m) {
  m.dflag = j.at(0).get<unsigned>();
  m.kappa = j.at(1).get<NatMultiset>();
  m.tau = j.at(2).get<Nat>();
}

void to_json(json& j, const TraceStep& s) {
  j = json{{"witness", s.witness}, {"before", s.before}, {"after", s.after}};
}

void from_json(const json& j, TraceStep& s) {
  s.witness = j.at("witness").get<StepWitness>();
  s.before = j.at("before").get<Measure3>();
  s.after = j.at("after").get<Measure3>();
}

void to_json(json& j, const Trace& t) {
  j = json{{"source", t.source}, {"steps", t.steps}, {"normalForm", t.normal_form}};
}

void from_json(const json& j, Trace& t) {
  t.source = j.at("source").get<Term>();
  t.steps = j.at("steps").get<std::vector<TraceStep>>();
  t.normal_form = j.at("normalForm").get<Term>();
}

void to_json(json& j, const FullRunResult& r) {
  if (const auto* n = std::get_if<FullNormalized>(&r)) {
    j = json{{"status", "normalized"}, {"steps", n->steps}, {"normalForm", n->normal_form}};
  } else {
    const auto& f = std::get<FuelExhausted>(r);
    j = json{{"status", "fuel-exhausted"}, {"stepsTaken", f.steps_taken}, {"last", f.last_term}};
  }
}

void to_json(json& j, const JoinResult& r) {
  if (const auto* ok = std::get_if<Joined>(&r)) {
    j = json{{"joined", true},
             {"common", ok->common},
             {"leftPath", ok->left_path},
             {"rightPath", ok->right_path}};
  } else {
    j = json{{"joined", false}, {"budgetUsed", std::get<NotJoined>(r).budget_used}};
  }
}

void to_json(json& j, const Fork& f) {
  j = json{{"source", f.source}, {"left", f.left}, {"right", f.right}};
}

void to_json(json& j, const DecreaseReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(json{{"witness", v.witness}, {"before", v.before}, {"after", v.after}});
  }
  json per_rule = json::object();
  for (const auto& [rule, counts] : r.decided_by_rule) {
    per_rule[std::string(rule_name(rule))] = {
        {"dflag", counts[0]}, {"kappaM", counts[1]}, {"tau", counts[2]}};
  }
  j = json{{"maxSize", r.max_size},
           {"checked", r.checked},
           {"violations", std::move(violations)},
           {"decidedBy",
            {{"dflag", r.decided_by[0]}, {"kappaM", r.decided_by[1]}, {"tau", r.decided_by[2]}}},
           {"decidedByRule", std::move(per_rule)}};
}

namespace {

json fork_cases(const std::vector<ForkCase>& cases) {
  json out = json::array();
  for (const auto& c : cases) out.push_back(json{{"fork", c.fork}, {"budgetUsed", c.budget_used}});
  return out;
}

}  // namespace

void to_json(json& j, const LocalJoinReport& r) {
  j = json{{"relation", relation_name(r.relation)},
           {"maxSize", r.max_size},
           {"budget", r.budget},
           {"termsChecked", r.terms_checked},
           {"forksChecked", r.forks_checked},
           {"joined", r.joined},
           {"inconclusive", fork_cases(r.inconclusive)},
           {"violations", fork_cases(r.violations)}};
}

void to_json(json& j, const UniqueNFReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(
        json{{"source", v.source}, {"normalForms", v.normal_forms}, {"normalizer", v.normalizer_result}});
  }
  j = json{{"relation", "safe"},
           {"maxSize", r.max_size},
           {"termsChecked", r.terms_checked},
           {"unique", r.unique},
           {"violations", std::move(violations)}};
}

void to_json(json& j, const CoverageReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json e{{"shape", row.shape},
           {"target", row.target},
           {"instances", row.instances},
           {"matched", row.matched},
           {"blocked", row.blocked},
           {"mismatches", row.mismatches},
           {"realized", row.realized()}};
    if (row.example) e["example"] = render(*row.example);
    rows.push_back(std::move(e));
  }
  j = json{{"maxSize", r.max_size},
           {"rows", std::move(rows)},
           {"vacuousInstances", r.vacuous_instances},
           {"vacuousWithSuccessors", r.vacuous_with_successors}};
}

void to_json(json& j, const NonJoinReport& r) {
  j = json{{"source", r.source},
           {"refl", r.refl},
           {"diff", r.diff},
           {"reflRun", r.refl_run},
           {"diffRun", r.diff_run},
           {"reflNormalForm", r.refl_normal_form},
           {"diffNormalForm", r.diff_normal_form},
           {"budget", r.budget},
           {"join", r.join},
           {"verdict", is_joined(r.join) ? "joinable" : "not joinable"}};
}

void to_json(json& j, const Value& v) {
  json value;
  if (const auto* b = std::get_if<Bit>(&v)) {
    value = b->value ? 1 : 0;
  } else if (const auto* n = std::get_if<Nat>(&v)) {
    value = *n;
  } else if (const auto* p = std::get_if<NatPair>(&v)) {
    value = json::array({p->first, p->second});
  } else if (const auto* m = std::get_if<NatMultiset>(&v)) {
    value = *m;
  } else {
    value = std::get<Measure3>(v);
  }
  j = json{{"kind", value_kind(v)}, {"value", std::move(value)}};
}

void to_json(json& j, const CounterexampleReport& r) {
  j = json{{"family", r.family},
           {"rule", rule_name(r.witness.rule)},
           {"pos", r.witness.position},
           {"from", r.witness.source},
           {"to", r.witness.result},
           {"before", r.before},
           {"after", r.after},
           {"verdict", verdict_name(r.verdict)}};
}

void to_json(json& j, const HuntResult& r) {
  j = json{{"family", r.family},
           {"relation", relation_name(r.relation)},
           {"maxSize", r.max_size},
           {"rule", r.only ? json(rule_name(*r.only)) : json(nullptr)},
           {"instancesChecked", r.instances_checked},
           {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}};
}

void to_json(json& j, const StressReport& r) {
  json samples = json::array();
  for (const auto& [s, d] : r.samples) samples.push_back(json{{"stepSize", s}, {"difference", d}});
  j = json{{"maxSize", r.max_size},
           {"instances", r.instances},
           {"slope", r.slope},
           {"intercept", r.intercept},
           {"exactFit", r.exact_fit},
           {"textbookFormHolds", r.textbook_form_holds},
           {"strictDrops", r.strict_drops},
           {"samples", std::move(samples)}};
}

void to_json(json& j, const Precedence& p) {
  j = json::array();
  for (Kind k : p.order) j.push_back(keyword(k));
}

void to_json(json& j, const LpoSearchReport& r) {
  j = json{{"maxSize", r.max_size},
           {"instances", r.instances},
           {"precedencesChecked", r.precedences_checked},
           {"orienting", r.orienting},
           {"first", r.first ? json(*r.first) : json(nullptr)}};
}

void to_json(json& j, const OrientationFailure& f) {
  j = json{{"witness", f.witness}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"grown", f.pumped}};
}

void to_json(json& j, const PolySearchReport& r) {
  json examples = json::array();
  for (const auto& [m, f] : r.examples) {
    examples.push_back(json{{"interpretation", render(m)}, {"failure", f}});
  }
  j = json{{"coefBound", r.coef_bound},
           {"scanSize", r.scan_size},
           {"assignments", r.assignments},
           {"classes", r.classes},
           {"orienting", r.orienting},
           {"failedInScan", r.failed_in_scan},
           {"failedByGrowth", r.failed_by_growth},
           {"largestWitness", r.largest_witness},
           {"rhsCoefficientExceeds", r.rhs_coefficient_exceeds},
           {"examples", std::move(examples)}};
}

void to_json(json& j, const KboSearchReport& r) {
  json examples = json::array();
  for (const auto& [w, f] : r.examples) {
    examples.push_back(json{{"weights", render(w)}, {"failure", f}});
  }
  j = json{{"weightBound", r.weight_bound},
           {"scanSize", r.scan_size},
           {"assignments", r.assignments},
           {"orienting", r.orienting},
           {"failedInScan", r.failed_in_scan},
           {"failedByGrowth", r.failed_by_growth},
           {"largestWitness", r.largest_witness},
           {"examples", std::move(examples)}};
}

}  // namespace ko7
