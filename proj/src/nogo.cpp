#include "ko7/nogo.hpp"

#include <algorithm>
#include <numeric>

#include "ko7/parallel.hpp"

namespace ko7 {

// ---------------------------------------------------------------------------
// Values

std::string_view value_kind(const Value& v) {
  switch (v.index()) {
    case 0:
      return "bit";
    case 1:
      return "nat";
    case 2:
      return "pair";
    case 3:
      return "multiset";
    default:
      return "measure3";
  }
}

std::string render(const Value& v) {
  if (const auto* b = std::get_if<Bit>(&v)) return b->value ? "1" : "0";
  if (const auto* n = std::get_if<Nat>(&v)) return std::to_string(*n);
  if (const auto* p = std::get_if<NatPair>(&v)) {
    return "(" + std::to_string(p->first) + ", " + std::to_string(p->second) + ")";
  }
  if (const auto* m = std::get_if<NatMultiset>(&v)) return render(*m);
  return render(std::get<Measure3>(v));
}

std::string_view verdict_name(Verdict v) {
  return v == Verdict::Increase ? "increase" : "no-strict-drop";
}

namespace {

bool nat_less(const Value& a, const Value& b) { return std::get<Nat>(a) < std::get<Nat>(b); }

bool bit_less(const Value& a, const Value& b) {
  return !std::get<Bit>(a).value && std::get<Bit>(b).value;
}

bool pair_lex_less(const Value& a, const Value& b) {
  return std::get<NatPair>(a) < std::get<NatPair>(b);
}

bool sub_multiset_less(const Value& a, const Value& b) {
  return std::get<NatMultiset>(a).is_strict_sub_multiset_of(std::get<NatMultiset>(b));
}

NatMultiset subterm_sizes(const Term& t) {
  NatMultiset out;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    out.insert(u.size());
    for (const Term& c : u.children()) walk(c);
  };
  walk(t);
  return out;
}

LinearInterpretation representative_polynomial() {
  LinearInterpretation m;
  for (Kind k : kAllKinds) {
    auto i = static_cast<std::size_t>(k);
    m.constant[i] = 1;
    for (std::size_t c = 0; c < arity(k); ++c) m.coef[i][c] = 1;
  }
  m.constant[static_cast<std::size_t>(Kind::Void)] = 2;
  return m;
}

WeightAssignment representative_weights() {
  // void, delta, integrate, merge, app, rec, eqw
  return WeightAssignment{{1, 3, 1, 1, 1, 2, 2}};
}

struct TermHunt {
  std::size_t checked = 0;
  std::optional<CounterexampleReport> first_increase;
  std::optional<CounterexampleReport> first_tie;
};

}  // namespace

HuntResult find_violation(const MeasureFamily& family, RelationKind relation,
                          std::size_t max_size, std::optional<RuleId> only) {
  const std::vector<Term> terms = enumerate(max_size);
  auto partial = parallel_map(terms.size(), [&](std::size_t i) {
    TermHunt h;
    std::vector<StepWitness> ws = steps(terms[i], relation);
    if (ws.empty()) return h;
    const Value before = family.valuation(terms[i]);
    for (StepWitness& w : ws) {
      if (only && w.rule != *only) continue;
      ++h.checked;
      Value after = family.valuation(w.result);
      if (family.less(after, before)) continue;
      bool increase = family.less(before, after);
      auto& slot = increase ? h.first_increase : h.first_tie;
      if (!slot) {
        slot = CounterexampleReport{family.name, std::move(w), before, std::move(after),
                                    increase ? Verdict::Increase : Verdict::NoStrictDrop};
      }
      if (increase) break;
    }
    return h;
  });
  HuntResult result{family.name, relation, max_size, only, 0, std::nullopt};
  std::optional<CounterexampleReport> tie;
  for (auto& h : partial) {
    result.instances_checked += h.checked;
    if (!result.counterexample && h.first_increase) result.counterexample = h.first_increase;
    if (!tie && h.first_tie) tie = h.first_tie;
  }
  if (!result.counterexample) result.counterexample = tie;
  return result;
}

Nat kappa_depth(const Term& t) {
  Nat m = 0;
  for (const Term& c : t.children()) m = std::max(m, kappa_depth(c));
  return t.is(Kind::Delta) ? m + 1 : m;
}

Nat tree_depth(const Term& t) {
  Nat m = 0;
  for (const Term& c : t.children()) m = std::max(m, tree_depth(c));
  return m + 1;
}

unsigned Precedence::rank(Kind k) const {
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == k) return static_cast<unsigned>(order.size() - 1 - i);
  }
  return 0;
}

Precedence constructor_precedence() {
  return Precedence{{Kind::EqW, Kind::RecD, Kind::App, Kind::Merge, Kind::Integrate, Kind::Delta,
                     Kind::Void}};
}

std::string render(const Precedence& p) {
  std::string out;
  for (std::size_t i = 0; i < p.order.size(); ++i) {
    if (i) out += " > ";
    out += keyword(p.order[i]);
  }
  return out;
}

MeasureFamily additive_family(Nat k) {
  return MeasureFamily{
      "additive-k" + std::to_string(k), 1,
      "delta-nesting depth plus the constant " + std::to_string(k),
      [k](const Term& t) -> Value { return kappa_depth(t) + k; }, nat_less, RuleId::RecSucc,
      RelationKind::FullRoot};
}

MeasureFamily head_precedence_family(const Precedence& prec) {
  return MeasureFamily{"head-precedence", 12,
                       "rank of the head symbol under " + render(prec) + ", no subterm clause",
                       [prec](const Term& t) -> Value { return Nat{prec.rank(t.kind())}; },
                       nat_less, RuleId::MergeCancel, RelationKind::FullRoot};
}

MeasureFamily canonical_family() {
  return MeasureFamily{"measure3", 0, "(dflag, kappaM, tau) under the lexicographic DM order",
                       [](const Term& t) -> Value { return measure3(t); },
                       [](const Value& a, const Value& b) {
                         return lex3_less(std::get<Measure3>(a), std::get<Measure3>(b));
                       },
                       std::nullopt, RelationKind::SafeRoot};
}

std::vector<MeasureFamily> catalog() {
  const LinearInterpretation poly = representative_polynomial();
  const WeightAssignment weights = representative_weights();
  auto size_of = [](const Term& t) -> Value { return Nat{t.size()}; };
  std::vector<MeasureFamily> out;
  out.push_back(additive_family(1));
  out.push_back({"lex-depth-size", 2, "(delta-nesting depth, size) lexicographic",
                 [](const Term& t) -> Value { return NatPair{kappa_depth(t), t.size()}; },
                 pair_lex_less, RuleId::RecSucc, RelationKind::FullRoot});
  out.push_back({"linear-poly", 3,
                 "linear interpretation, every coefficient 1, constants 1 and M(void) = 2",
                 [poly](const Term& t) -> Value { return poly.eval(t); }, nat_less,
                 RuleId::RecSucc, RelationKind::FullRoot});
  out.push_back({"delta-flag", 4, "single phase bit for rec _ _ (delta _)",
                 [](const Term& t) -> Value { return Bit{delta_flag(t) == 1}; }, bit_less,
                 RuleId::MergeVoidLeft, RelationKind::FullRoot});
  out.push_back({"size-ordinal", 5, "node count as a shape-blind ordinal", size_of, nat_less,
                 std::nullopt, RelationKind::FullRoot});
  out.push_back({"kappa-depth", 6, "delta-nesting depth alone",
                 [](const Term& t) -> Value { return kappa_depth(t); }, nat_less,
                 RuleId::MergeCancel, RelationKind::FullRoot});
  out.push_back({"naive-multiset", 7, "multiset of subterm sizes under strict inclusion",
                 [](const Term& t) -> Value { return subterm_sizes(t); }, sub_multiset_less,
                 RuleId::RecSucc, RelationKind::FullRoot});
  out.push_back({"hybrid-flag-size", 9, "(delta flag, size) lexicographic",
                 [](const Term& t) -> Value { return NatPair{delta_flag(t), t.size()}; },
                 pair_lex_less, std::nullopt, RelationKind::FullRoot});
  out.push_back({"raw-recursion", 10, "node count along unguarded rec-succ", size_of, nat_less,
                 RuleId::RecSucc, RelationKind::FullRoot});
  out.push_back(head_precedence_family(constructor_precedence()));
  out.push_back({"kbo-weight", 13, "symbol weight sum " + render(weights),
                 [weights](const Term& t) -> Value { return weights.eval(t); }, nat_less,
                 RuleId::RecSucc, RelationKind::FullRoot});
  out.push_back({"tree-depth", 14, "height of the syntax tree",
                 [](const Term& t) -> Value { return tree_depth(t); }, nat_less, RuleId::RecSucc,
                 RelationKind::FullRoot});
  return out;
}

std::optional<MeasureFamily> family_by_name(std::string_view name) {
  if (name == "measure3") return canonical_family();
  for (MeasureFamily& f : catalog()) {
    if (f.name == name) return std::move(f);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Duplication stress

StressReport duplication_stress_check(std::size_t max_size) {
  StressReport report;
  report.max_size = max_size;
  std::vector<std::pair<std::size_t, long long>> points;
  for (const Term& t : enumerate(max_size)) {
    for (const StepWitness& w : root_steps_full(t)) {
      if (w.rule != RuleId::RecSucc) continue;
      ++report.instances;
      auto before = static_cast<long long>(w.source.size());
      auto after = static_cast<long long>(w.result.size());
      std::size_t s = w.source.child(1).size();
      points.emplace_back(s, after - before);
      if (after == before - 1 + static_cast<long long>(s)) ++report.textbook_form_holds;
      if (after < before) ++report.strict_drops;
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  report.samples = points;
  if (points.empty()) return report;
  const auto& p0 = points.front();
  const auto& p1 = points.back();
  if (p1.first != p0.first) {
    long long dx = static_cast<long long>(p1.first) - static_cast<long long>(p0.first);
    long long dy = p1.second - p0.second;
    if (dy % dx != 0) return report;
    report.slope = dy / dx;
  }
  report.intercept = p0.second - report.slope * static_cast<long long>(p0.first);
  report.exact_fit = std::all_of(points.begin(), points.end(), [&](const auto& p) {
    return p.second == report.slope * static_cast<long long>(p.first) + report.intercept;
  });
  return report;
}

// ---------------------------------------------------------------------------
// LPO

bool lpo_greater(const Term& a, const Term& b, const Precedence& prec) {
  // Subterm clause: some argument of a is b or above b.
  for (const Term& ai : a.children()) {
    if (ai == b || lpo_greater(ai, b, prec)) return true;
  }
  auto dominates_args = [&] {
    for (const Term& bj : b.children()) {
      if (!lpo_greater(a, bj, prec)) return false;
    }
    return true;
  };
  if (prec.greater(a.kind(), b.kind())) return dominates_args();
  if (a.kind() == b.kind()) {
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (a.child(i) == b.child(i)) continue;
      return lpo_greater(a.child(i), b.child(i), prec) && dominates_args();
    }
  }
  return false;
}

namespace {

std::vector<StepWitness> full_root_instances(std::size_t max_size) {
  std::vector<StepWitness> out;
  for (const Term& t : enumerate(max_size)) {
    for (StepWitness& w : root_steps_full(t)) out.push_back(std::move(w));
  }
  return out;
}

bool orients_all(const std::vector<StepWitness>& instances, const Precedence& prec) {
  return std::all_of(instances.begin(), instances.end(), [&](const StepWitness& w) {
    return lpo_greater(w.source, w.result, prec);
  });
}

}  // namespace

bool lpo_orients(const Precedence& prec, std::size_t max_size) {
  return orients_all(full_root_instances(max_size), prec);
}

LpoSearchReport lpo_search(std::size_t max_size) {
  LpoSearchReport report;
  report.max_size = max_size;
  const std::vector<StepWitness> instances = full_root_instances(max_size);
  report.instances = instances.size();
  Precedence prec{kAllKinds};
  do {
    ++report.precedences_checked;
    if (orients_all(instances, prec)) {
      ++report.orienting;
      if (!report.first) report.first = prec;
    }
  } while (std::next_permutation(prec.order.begin(), prec.order.end()));
  return report;
}

std::optional<Precedence> search_precedence(std::size_t max_size) {
  return lpo_search(max_size).first;
}

// ---------------------------------------------------------------------------
// Linear interpretations and weights

Nat LinearInterpretation::eval(const Term& t) const {
  auto k = static_cast<std::size_t>(t.kind());
  Nat v = constant[k];
  for (std::size_t i = 0; i < t.arity(); ++i) v += coef[k][i] * eval(t.child(i));
  return v;
}

std::string render(const LinearInterpretation& m) {
  std::string out;
  for (Kind k : kAllKinds) {
    auto i = static_cast<std::size_t>(k);
    if (!out.empty()) out += "; ";
    out += std::string(keyword(k)) + ": " + std::to_string(m.constant[i]);
    for (std::size_t c = 0; c < arity(k); ++c) {
      out += " + " + std::to_string(m.coef[i][c]) + "x" + std::to_string(c + 1);
    }
  }
  return out;
}

Nat WeightAssignment::eval(const Term& t) const {
  Nat v = weight[static_cast<std::size_t>(t.kind())];
  for (const Term& c : t.children()) v += eval(c);
  return v;
}

std::string render(const WeightAssignment& w) {
  std::string out = "{";
  for (Kind k : kAllKinds) {
    if (out.size() > 1) out += ", ";
    out += std::string(keyword(k)) + ": " + std::to_string(w.weight[static_cast<std::size_t>(k)]);
  }
  return out + "}";
}

namespace {

constexpr std::size_t kGrowthCap = 512;

bool in_fragment(const Term& t) {
  if (t.is(Kind::Integrate) || t.is(Kind::Merge) || t.is(Kind::EqW)) return false;
  for (const Term& c : t.children()) {
    if (!in_fragment(c)) return false;
  }
  return true;
}

std::vector<StepWitness> recsucc_instances(std::size_t scan_size, bool fragment_only) {
  std::vector<StepWitness> out;
  for (const Term& t : enumerate(scan_size)) {
    if (!t.is(Kind::RecD) || !t.child(2).is(Kind::Delta)) continue;
    if (fragment_only && !in_fragment(t)) continue;
    for (StepWitness& w : root_steps_full(t)) {
      if (w.rule == RuleId::RecSucc) out.push_back(std::move(w));
    }
  }
  return out;
}

StepWitness recsucc_at(const Term& step) {
  Term source = rec(Term(), step, delta(Term()));
  return StepWitness{RuleId::RecSucc, Position{}, source, app(step, rec(Term(), step, Term()))};
}

// Scans `instances`, then grows the step operand of rec void s (delta void)
// with whichever wrapper raises eval the most, until the rule fails.
template <class Eval>
std::optional<OrientationFailure> hunt_recsucc(const Eval& eval,
                                               const std::vector<StepWitness>& instances,
                                               const std::vector<std::function<Term(const Term&)>>& grow) {
  for (const StepWitness& w : instances) {
    Nat lhs = eval(w.source);
    Nat rhs = eval(w.result);
    if (rhs >= lhs) return OrientationFailure{w, lhs, rhs, false};
  }
  Term s;
  for (std::size_t round = 0; round < kGrowthCap; ++round) {
    StepWitness w = recsucc_at(s);
    Nat lhs = eval(w.source);
    Nat rhs = eval(w.result);
    if (rhs >= lhs) return OrientationFailure{std::move(w), lhs, rhs, true};
    Nat current = eval(s);
    std::optional<Term> best;
    Nat best_value = current;
    for (const auto& g : grow) {
      Term cand = g(s);
      Nat v = eval(cand);
      if (v > best_value) {
        best_value = v;
        best = std::move(cand);
      }
    }
    if (!best) return std::nullopt;
    s = std::move(*best);
  }
  return std::nullopt;
}

const std::vector<std::function<Term(const Term&)>>& fragment_growth() {
  static const std::vector<std::function<Term(const Term&)>> g = {
      [](const Term& s) { return delta(s); },
      [](const Term& s) { return app(Term(), s); },
      [](const Term& s) { return rec(Term(), Term(), s); },
  };
  return g;
}

const std::vector<std::function<Term(const Term&)>>& full_growth() {
  static const std::vector<std::function<Term(const Term&)>> g = {
      [](const Term& s) { return delta(s); },
      [](const Term& s) { return integrate(s); },
      [](const Term& s) { return merge(Term(), s); },
      [](const Term& s) { return app(Term(), s); },
      [](const Term& s) { return rec(Term(), Term(), s); },
      [](const Term& s) { return eqw(Term(), s); },
  };
  return g;
}

}  // namespace

std::optional<OrientationFailure> recsucc_failure(const LinearInterpretation& m,
                                                  std::size_t scan_size, bool fragment_only) {
  return hunt_recsucc([&](const Term& t) { return m.eval(t); },
                      recsucc_instances(scan_size, fragment_only),
                      fragment_only ? fragment_growth() : full_growth());
}

std::optional<OrientationFailure> recsucc_failure(const WeightAssignment& w,
                                                  std::size_t scan_size) {
  return hunt_recsucc([&](const Term& t) { return w.eval(t); },
                      recsucc_instances(scan_size, false), full_growth());
}

PolySearchReport poly_search(Nat coef_bound, std::size_t scan_size) {
  PolySearchReport report;
  report.coef_bound = coef_bound;
  report.scan_size = scan_size;
  const Nat b = coef_bound;
  const std::uint64_t consts = b + 1;
  // integrate (1 child), merge and eqw (2 children each) are left free.
  const std::uint64_t free_choices = (consts * b) * (consts * b * b) * (consts * b * b);
  const std::vector<StepWitness> instances = recsucc_instances(scan_size, true);

  constexpr auto V = static_cast<std::size_t>(Kind::Void);
  constexpr auto D = static_cast<std::size_t>(Kind::Delta);
  constexpr auto A = static_cast<std::size_t>(Kind::App);
  constexpr auto R = static_cast<std::size_t>(Kind::RecD);

  // One work item per (void, delta) choice; app and rec are looped inside.
  struct Partial {
    std::uint64_t classes = 0, orienting = 0, in_scan = 0, by_growth = 0, rhs_exceeds = 0;
    std::size_t largest = 0;
    std::vector<std::pair<LinearInterpretation, OrientationFailure>> examples;
  };
  const std::size_t outer = static_cast<std::size_t>(consts * consts * b);
  auto partial = parallel_map(outer, [&](std::size_t idx) {
    Partial p;
    LinearInterpretation m = representative_polynomial();
    m.constant[V] = idx / (consts * b);
    m.constant[D] = (idx / b) % consts;
    m.coef[D][0] = idx % b + 1;
    for (Nat a0 = 0; a0 <= b; ++a0)
      for (Nat a1 = 1; a1 <= b; ++a1)
        for (Nat a2 = 1; a2 <= b; ++a2)
          for (Nat r0 = 0; r0 <= b; ++r0)
            for (Nat rb = 1; rb <= b; ++rb)
              for (Nat rs = 1; rs <= b; ++rs)
                for (Nat rn = 1; rn <= b; ++rn) {
                  m.constant[A] = a0;
                  m.coef[A] = {a1, a2, 0};
                  m.constant[R] = r0;
                  m.coef[R] = {rb, rs, rn};
                  ++p.classes;
                  if (a1 + a2 * rs > rs) ++p.rhs_exceeds;
                  auto failure = hunt_recsucc([&](const Term& t) { return m.eval(t); }, instances,
                                              fragment_growth());
                  if (!failure) {
                    ++p.orienting;
                    continue;
                  }
                  (failure->pumped ? p.by_growth : p.in_scan) += 1;
                  p.largest = std::max(p.largest, failure->witness.source.size());
                  bool first_of_kind = failure->pumped ? p.by_growth == 1 : p.in_scan == 1;
                  if (first_of_kind) p.examples.emplace_back(m, std::move(*failure));
                }
    return p;
  });
  for (auto& p : partial) {
    report.classes += p.classes;
    report.orienting += p.orienting * free_choices;
    report.failed_in_scan += p.in_scan;
    report.failed_by_growth += p.by_growth;
    report.rhs_coefficient_exceeds += p.rhs_exceeds;
    report.largest_witness = std::max(report.largest_witness, p.largest);
    for (auto& e : p.examples) {
      bool have = std::any_of(report.examples.begin(), report.examples.end(), [&](const auto& x) {
        return x.second.pumped == e.second.pumped;
      });
      if (!have) report.examples.push_back(std::move(e));
    }
  }
  report.assignments = report.classes * free_choices;
  return report;
}

KboSearchReport kbo_search(Nat weight_bound, std::size_t scan_size) {
  KboSearchReport report;
  report.weight_bound = weight_bound;
  report.scan_size = scan_size;
  const std::vector<StepWitness> instances = recsucc_instances(scan_size, false);
  const Nat base = weight_bound + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < 7; ++i) total *= base;
  auto results = parallel_map(static_cast<std::size_t>(total), [&](std::size_t idx) {
    WeightAssignment w;
    std::size_t rest = idx;
    for (std::size_t i = 0; i < 7; ++i) {
      w.weight[i] = rest % base;
      rest /= base;
    }
    return std::make_pair(w, hunt_recsucc([&](const Term& t) { return w.eval(t); }, instances,
                                          full_growth()));
  });
  report.assignments = total;
  for (auto& [w, failure] : results) {
    if (!failure) {
      ++report.orienting;
      continue;
    }
    (failure->pumped ? report.failed_by_growth : report.failed_in_scan) += 1;
    report.largest_witness = std::max(report.largest_witness, failure->witness.source.size());
    bool have = std::any_of(report.examples.begin(), report.examples.end(),
                            [&](const auto& x) { return x.second.pumped == failure->pumped; });
    if (!have) report.examples.emplace_back(w, *failure);
  }
  return report;
}

}  // namespace ko7
