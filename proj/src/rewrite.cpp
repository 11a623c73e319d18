#include "ko7/rewrite.hpp"

#include "ko7/measure.hpp"

namespace ko7 {

namespace {

constexpr std::array<std::string_view, 8> kRuleNames = {
    "merge-void-left", "merge-void-right", "merge-cancel", "rec-zero",
    "rec-succ",        "int-delta",        "eq-refl",      "eq-diff"};

constexpr std::array<std::string_view, 4> kRelationNames = {"full", "safe", "safe-ctx",
                                                            "full-ctx"};

// Appends every root instance of `t`, relabelled as occurring at `pos` inside
// `whole`. When `guarded` is set the SafeStep side conditions apply.
void root_instances(const Term& t, bool guarded, const Term& whole, const Position& pos,
                    std::vector<StepWitness>& out) {
  auto emit = [&](RuleId r, Term rhs) {
    Term result = pos.is_root() ? rhs : replace_at(whole, pos, rhs);
    out.push_back(StepWitness{r, pos, whole, std::move(result)});
  };
  switch (t.kind()) {
    case Kind::Merge: {
      const Term& a = t.child(0);
      const Term& b = t.child(1);
      if (a.is(Kind::Void) && (!guarded || delta_flag(b) == 0)) emit(RuleId::MergeVoidLeft, b);
      if (b.is(Kind::Void) && (!guarded || delta_flag(a) == 0)) emit(RuleId::MergeVoidRight, a);
      if (a == b && (!guarded || kappa_m_empty(t))) emit(RuleId::MergeCancel, a);
      break;
    }
    case Kind::RecD: {
      const Term& base = t.child(0);
      const Term& step = t.child(1);
      const Term& arg = t.child(2);
      if (arg.is(Kind::Void) && (!guarded || delta_flag(base) == 0)) {
        emit(RuleId::RecZero, base);
      }
      if (arg.is(Kind::Delta)) emit(RuleId::RecSucc, app(step, rec(base, step, arg.child(0))));
      break;
    }
    case Kind::Integrate:
      if (t.child(0).is(Kind::Delta)) emit(RuleId::IntDelta, Term());
      break;
    case Kind::EqW: {
      const Term& a = t.child(0);
      const Term& b = t.child(1);
      bool same = a == b;
      if (same && (!guarded || kappa_m_empty(a))) emit(RuleId::EqRefl, Term());
      if (!guarded || !same) emit(RuleId::EqDiff, integrate(merge(a, b)));
      break;
    }
    case Kind::Void:
    case Kind::Delta:
    case Kind::App:
      break;
  }
}

bool safe_ctx_descends(Kind k) {
  return k == Kind::Integrate || k == Kind::Merge || k == Kind::App || k == Kind::RecD;
}

// Preorder walk so witnesses come out sorted by position, then rule.
void ctx_walk(const Term& sub, const Position& pos, bool guarded, const Term& whole,
              std::vector<StepWitness>& out) {
  root_instances(sub, guarded, whole, pos, out);
  if (guarded && !safe_ctx_descends(sub.kind())) return;
  for (std::size_t i = 0; i < sub.arity(); ++i) {
    ctx_walk(sub.child(i), pos.child(i), guarded, whole, out);
  }
}

}  // namespace

std::string_view rule_name(RuleId r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (RuleId r : kAllRules) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

std::string_view relation_name(RelationKind r) {
  return kRelationNames[static_cast<std::size_t>(r)];
}

std::optional<RelationKind> relation_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRelationNames.size(); ++i) {
    if (kRelationNames[i] == name) return static_cast<RelationKind>(i);
  }
  return std::nullopt;
}

std::vector<StepWitness> root_steps_full(const Term& t) {
  std::vector<StepWitness> out;
  root_instances(t, false, t, Position{}, out);
  return out;
}

std::vector<StepWitness> root_steps_safe(const Term& t) {
  std::vector<StepWitness> out;
  root_instances(t, true, t, Position{}, out);
  return out;
}

std::vector<StepWitness> ctx_steps_safe(const Term& t) {
  std::vector<StepWitness> out;
  ctx_walk(t, Position{}, true, t, out);
  return out;
}

std::vector<StepWitness> ctx_steps_full(const Term& t) {
  std::vector<StepWitness> out;
  ctx_walk(t, Position{}, false, t, out);
  return out;
}

std::vector<StepWitness> steps(const Term& t, RelationKind relation) {
  switch (relation) {
    case RelationKind::FullRoot:
      return root_steps_full(t);
    case RelationKind::SafeRoot:
      return root_steps_safe(t);
    case RelationKind::SafeCtx:
      return ctx_steps_safe(t);
    case RelationKind::FullCtx:
      return ctx_steps_full(t);
  }
  return {};
}

}  // namespace ko7
