#pragma once

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ko7/measure.hpp"
#include "ko7/rewrite.hpp"
#include "ko7/term.hpp"

namespace ko7 {

inline constexpr std::size_t kDefaultFuel = 10000;

struct TraceStep {
  StepWitness witness;
  Measure3 before;
  Measure3 after;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// A safe root reduction from `source` to the normal form `normal_form`.
/// Steps are chained and each one strictly lowers measure3.
struct Trace {
  Term source;
  std::vector<TraceStep> steps;
  Term normal_form;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Raised when a safe step fails to lower measure3. Never expected; it means
/// the guards and the measure disagree.
class MeasureViolation : public std::logic_error {
 public:
  explicit MeasureViolation(TraceStep step);
  const TraceStep& step() const { return step_; }

 private:
  TraceStep step_;
};

/// Raised by reaches_target when the target is not a safe normal form.
class NotNormalForm : public std::invalid_argument {
 public:
  explicit NotNormalForm(const Term& target);
};

bool is_normal_form_safe(const Term& t);

/// Applies the first safe root witness until none applies, checking the
/// measure drop after every step.
Trace normalize_safe(const Term& t);

struct FullNormalized {
  Term normal_form;
  std::vector<StepWitness> steps;
};

struct FuelExhausted {
  Term last_term;
  std::size_t steps_taken = 0;
};

using FullRunResult = std::variant<FullNormalized, FuelExhausted>;

/// Applies the first full-context witness at most `fuel` times.
FullRunResult normalize_full(const Term& t, std::size_t fuel = kDefaultFuel);

/// Whether t reaches `target` under safe root steps, decided by normalizing
/// t and comparing. Throws NotNormalForm if `target` is not normal.
bool reaches_target(const Term& t, const Term& target);

}  // namespace ko7
