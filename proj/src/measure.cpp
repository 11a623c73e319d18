#include "ko7/measure.hpp"

#include "ko7/parallel.hpp"

namespace ko7 {

namespace {

// Returns tau(t) and accumulates the tau of every rec occurrence into `acc`.
Nat collect_kappa(const Term& t, NatMultiset& acc) {
  Nat sum = t.is(Kind::EqW) ? 3 : 1;
  for (const Term& c : t.children()) sum += collect_kappa(c, acc);
  if (t.is(Kind::RecD)) acc.insert(sum);
  return sum;
}

}  // namespace

unsigned delta_flag(const Term& t) {
  return t.is(Kind::RecD) && t.child(2).is(Kind::Delta) ? 1 : 0;
}

Nat tau(const Term& t) {
  Nat sum = t.is(Kind::EqW) ? 3 : 1;
  for (const Term& c : t.children()) sum += tau(c);
  return sum;
}

NatMultiset kappa_m(const Term& t) {
  NatMultiset out;
  collect_kappa(t, out);
  return out;
}

bool kappa_m_empty(const Term& t) {
  if (t.is(Kind::RecD)) return false;
  for (const Term& c : t.children()) {
    if (!kappa_m_empty(c)) return false;
  }
  return true;
}

Measure3 measure3(const Term& t) {
  Measure3 m;
  m.dflag = delta_flag(t);
  m.tau = collect_kappa(t, m.kappa);
  return m;
}

bool lex3_less(const Measure3& a, const Measure3& b) {
  if (a.dflag != b.dflag) return a.dflag < b.dflag;
  if (a.kappa != b.kappa) return dm_less(a.kappa, b.kappa);
  return a.tau < b.tau;
}

std::string_view component_name(Component c) {
  switch (c) {
    case Component::DFlag:
      return "dflag";
    case Component::KappaM:
      return "kappaM";
    case Component::Tau:
      return "tau";
  }
  return "?";
}

std::optional<Component> deciding_component(const Measure3& before, const Measure3& after) {
  if (!lex3_less(after, before)) return std::nullopt;
  if (after.dflag != before.dflag) return Component::DFlag;
  if (after.kappa != before.kappa) return Component::KappaM;
  return Component::Tau;
}

std::string render(const Measure3& m) {
  return "(" + std::to_string(m.dflag) + ", " + render(m.kappa) + ", " + std::to_string(m.tau) +
         ")";
}

DecreaseReport check_decrease_sweep(std::size_t max_size) {
  const std::vector<Term> terms = enumerate(max_size);
  auto partial = parallel_map(terms.size(), [&](std::size_t i) {
    DecreaseReport r;
    const Term& t = terms[i];
    std::vector<StepWitness> ws = root_steps_safe(t);
    if (ws.empty()) return r;
    const Measure3 before = measure3(t);
    for (StepWitness& w : ws) {
      ++r.checked;
      Measure3 after = measure3(w.result);
      if (auto c = deciding_component(before, after)) {
        auto idx = static_cast<std::size_t>(*c);
        ++r.decided_by[idx];
        ++r.decided_by_rule[w.rule][idx];
      } else {
        r.violations.push_back({std::move(w), before, std::move(after)});
      }
    }
    return r;
  });

  DecreaseReport report;
  report.max_size = max_size;
  for (auto& r : partial) {
    report.checked += r.checked;
    for (std::size_t c = 0; c < 3; ++c) report.decided_by[c] += r.decided_by[c];
    for (const auto& [rule, counts] : r.decided_by_rule) {
      auto& dst = report.decided_by_rule[rule];
      for (std::size_t c = 0; c < 3; ++c) dst[c] += counts[c];
    }
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

}  // namespace ko7
