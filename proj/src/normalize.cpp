#include "ko7/normalize.hpp"

namespace ko7 {

MeasureViolation::MeasureViolation(TraceStep step)
    : std::logic_error("measure did not decrease on " +
                       std::string(rule_name(step.witness.rule)) + " at " +
                       render(step.witness.position) + ": " + render(step.witness.source) +
                       " -> " + render(step.witness.result) + ", " + render(step.before) +
                       " -> " + render(step.after)),
      step_(std::move(step)) {}

NotNormalForm::NotNormalForm(const Term& target)
    : std::invalid_argument("target is not a safe normal form: " + render(target)) {}

bool is_normal_form_safe(const Term& t) { return root_steps_safe(t).empty(); }

Trace normalize_safe(const Term& t) {
  Trace trace{t, {}, t};
  Term cur = t;
  Measure3 cur_m = measure3(cur);
  for (;;) {
    std::vector<StepWitness> ws = root_steps_safe(cur);
    if (ws.empty()) break;
    TraceStep step{std::move(ws.front()), cur_m, {}};
    step.after = measure3(step.witness.result);
    if (!lex3_less(step.after, step.before)) throw MeasureViolation(std::move(step));
    cur = step.witness.result;
    cur_m = step.after;
    trace.steps.push_back(std::move(step));
  }
  trace.normal_form = cur;
  return trace;
}

FullRunResult normalize_full(const Term& t, std::size_t fuel) {
  FullNormalized run{t, {}};
  Term cur = t;
  for (std::size_t used = 0;; ++used) {
    std::vector<StepWitness> ws = ctx_steps_full(cur);
    if (ws.empty()) {
      run.normal_form = cur;
      return run;
    }
    if (used == fuel) return FuelExhausted{cur, used};
    cur = ws.front().result;
    run.steps.push_back(std::move(ws.front()));
  }
}

bool reaches_target(const Term& t, const Term& target) {
  if (!is_normal_form_safe(target)) throw NotNormalForm(target);
  return normalize_safe(t).normal_form == target;
}

}  // namespace ko7
