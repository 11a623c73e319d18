#include "ko7/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "ko7/confluence.hpp"
#include "ko7/json.hpp"
#include "ko7/measure.hpp"
#include "ko7/nogo.hpp"
#include "ko7/normalize.hpp"

namespace ko7::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string describe(const StepWitness& w) {
  return std::string(rule_name(w.rule)) + " @ " + render(w.position) + ": " + render(w.source) +
         " -> " + render(w.result);
}

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

RelationKind relation_or_throw(const std::string& name) {
  auto r = relation_from_name(name);
  if (!r) throw UsageError("unknown relation '" + name + "' (expected safe, full, safe-ctx, full-ctx)");
  return *r;
}

// Terms come from the positional argument or, with --file, one per line.
std::vector<std::string> term_inputs(const std::string& term, const std::string& file) {
  if (file.empty()) {
    if (term.empty()) throw UsageError("missing TERM argument");
    return {term};
  }
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open '" + file + "'");
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    out.push_back(line);
  }
  return out;
}

// Runs `fn` on each input term; JSON results are emitted as one document
// (an array when reading from a file).
int for_each_term(const std::string& term, const std::string& file, const CliConfig& cfg,
                  std::ostream& out,
                  const std::function<int(const Term&, json&, std::ostream&)>& fn) {
  std::vector<std::string> inputs = term_inputs(term, file);
  json batch = json::array();
  int status = kExitOk;
  for (const std::string& text : inputs) {
    Term t = parse(text);
    json j;
    status = std::max(status, fn(t, j, out));
    if (cfg.json) batch.push_back(std::move(j));
  }
  if (cfg.json) out << (file.empty() ? batch.at(0) : batch).dump() << "\n";
  return status;
}

// ---------------------------------------------------------------------------

int cmd_parse(const Term& t, const CliConfig& cfg, json& j, std::ostream& out) {
  if (cfg.json) {
    j = t;
  } else {
    out << render(t) << "\n";
  }
  return kExitOk;
}

int cmd_step(const Term& t, const CliConfig& cfg, json& j, std::ostream& out) {
  std::vector<StepWitness> ws = steps(t, cfg.relation);
  if (cfg.json) {
    j = ws;
    return kExitOk;
  }
  if (ws.empty()) out << "no " << relation_name(cfg.relation) << " steps from " << render(t) << "\n";
  for (const StepWitness& w : ws) out << describe(w) << "\n";
  return kExitOk;
}

int cmd_normalize(const Term& t, const CliConfig& cfg, bool trace, json& j, std::ostream& out) {
  if (cfg.relation == RelationKind::SafeRoot) {
    Trace tr = normalize_safe(t);
    if (cfg.json) {
      j = tr;
      return kExitOk;
    }
    if (trace) {
      out << "source: " << render(tr.source) << "\n";
      std::size_t i = 0;
      for (const TraceStep& s : tr.steps) {
        out << ++i << ". " << describe(s.witness) << "  " << render(s.before) << " -> "
            << render(s.after) << "\n";
      }
      out << "normal form: ";
    }
    out << render(tr.normal_form) << "\n";
    return kExitOk;
  }
  FullRunResult r = normalize_full(t, cfg.fuel);
  if (cfg.json) {
    j = r;
  } else if (const auto* n = std::get_if<FullNormalized>(&r)) {
    if (trace) {
      out << "source: " << render(t) << "\n";
      std::size_t i = 0;
      for (const StepWitness& w : n->steps) out << ++i << ". " << describe(w) << "\n";
      out << "normal form: ";
    }
    out << render(n->normal_form) << "\n";
  } else {
    const auto& f = std::get<FuelExhausted>(r);
    out << "fuel exhausted after " << plural(f.steps_taken, "step") << " at "
        << render(f.last_term) << "\n";
  }
  return std::holds_alternative<FullNormalized>(r) ? kExitOk : kExitViolation;
}

int cmd_measure(const Term& t, const CliConfig& cfg, json& j, std::ostream& out) {
  Measure3 m = measure3(t);
  if (cfg.json) {
    j = json{{"term", t}, {"measure", m}};
  } else {
    out << "dflag: " << m.dflag << "\nkappaM: " << render(m.kappa) << "\ntau: " << m.tau << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_check_decrease(const CliConfig& cfg, std::ostream& out) {
  DecreaseReport r = check_decrease_sweep(cfg.max_size);
  if (cfg.json) {
    out << json(r).dump() << "\n";
    return r.ok() ? kExitOk : kExitViolation;
  }
  out << "decrease sweep over terms up to size " << r.max_size << "\n";
  out << "checked: " << plural(r.checked, "safe root step") << "\n";
  out << "violations: " << r.violations.size() << "\n";
  for (const auto& v : r.violations) {
    out << "  " << describe(v.witness) << "  " << render(v.before) << " -> " << render(v.after)
        << "\n";
  }
  out << "decided by: dflag " << r.decided_by[0] << ", kappaM " << r.decided_by[1] << ", tau "
      << r.decided_by[2] << "\n";
  for (const auto& [rule, c] : r.decided_by_rule) {
    out << "  " << rule_name(rule) << ": dflag " << c[0] << ", kappaM " << c[1] << ", tau " << c[2]
        << "\n";
  }
  return r.ok() ? kExitOk : kExitViolation;
}

int cmd_check_local_join(const CliConfig& cfg, std::ostream& out) {
  if (cfg.relation != RelationKind::SafeRoot && cfg.relation != RelationKind::SafeCtx) {
    throw UsageError("local-join is checked for safe or safe-ctx only");
  }
  LocalJoinReport r = local_join_sweep(cfg.max_size, cfg.relation, cfg.budget);
  if (cfg.json) {
    out << json(r).dump() << "\n";
    return r.ok() ? kExitOk : kExitViolation;
  }
  out << "local-join sweep (" << relation_name(r.relation) << ") over terms up to size "
      << r.max_size << ", budget " << r.budget << "\n";
  out << "forks checked: " << r.forks_checked << "\njoined: " << r.joined << "\n";
  out << "inconclusive: " << r.inconclusive.size() << "\nviolations: " << r.violations.size()
      << "\n";
  for (const auto* list : {&r.inconclusive, &r.violations}) {
    for (const ForkCase& c : *list) {
      out << "  " << render(c.fork.source) << ": " << describe(c.fork.left) << " | "
          << describe(c.fork.right) << "\n";
    }
  }
  return r.ok() ? kExitOk : kExitViolation;
}

int cmd_check_unique_nf(const CliConfig& cfg, std::ostream& out) {
  UniqueNFReport r = unique_nf_sweep(cfg.max_size);
  if (cfg.json) {
    out << json(r).dump() << "\n";
    return r.ok() ? kExitOk : kExitViolation;
  }
  out << "unique-nf sweep over terms up to size " << r.max_size << "\n";
  out << "terms checked: " << r.terms_checked << "\nunique: " << r.unique
      << "\nviolations: " << r.violations.size() << "\n";
  for (const auto& v : r.violations) {
    out << "  " << render(v.source) << ": " << plural(v.normal_forms.size(), "normal form")
        << ", normalizer gave " << render(v.normalizer_result) << "\n";
  }
  return r.ok() ? kExitOk : kExitViolation;
}

// Hunts on the family's focus rule first, then on every rule.
HuntResult hunt(const MeasureFamily& f, std::size_t max_size, bool all_rules) {
  if (!all_rules && f.focus) {
    HuntResult h = find_violation(f, f.relation, max_size, f.focus);
    if (h.found()) return h;
  }
  return find_violation(f, f.relation, max_size);
}

std::string describe(const CounterexampleReport& c) {
  return describe(c.witness) + "  (" + render(c.before) + " -> " + render(c.after) + ", " +
         std::string(verdict_name(c.verdict)) + ")";
}

int cmd_check_nogo(const CliConfig& cfg, const std::string& family, bool all_rules,
                   std::ostream& out) {
  if (!family.empty()) {
    auto f = family_by_name(family);
    if (!f) throw UsageError("unknown family '" + family + "'");
    HuntResult h = hunt(*f, cfg.max_size, all_rules);
    bool canonical = f->item == 0;
    bool ok = canonical ? !h.found() : h.found();
    if (cfg.json) {
      out << json(h).dump() << "\n";
      return ok ? kExitOk : kExitViolation;
    }
    out << "family: " << f->name << " (" << f->summary << ")\n";
    out << "relation: " << relation_name(h.relation) << ", terms up to size " << h.max_size;
    if (h.only) out << ", rule " << rule_name(*h.only);
    out << "\ninstances checked: " << h.instances_checked << "\n";
    if (h.found()) {
      const auto& c = *h.counterexample;
      out << "counterexample: " << describe(c.witness) << "\n";
      out << "value: " << render(c.before) << " -> " << render(c.after) << "\n";
      out << "verdict: " << verdict_name(c.verdict) << "\n";
    } else {
      out << "no violation found\n";
    }
    return ok ? kExitOk : kExitViolation;
  }

  std::vector<MeasureFamily> families = catalog();
  json j = json::object();
  j["families"] = json::array();
  bool ok = true;
  if (!cfg.json) out << "no-go catalog over terms up to size " << cfg.max_size << "\n";
  for (const MeasureFamily& f : families) {
    HuntResult h = hunt(f, cfg.max_size, all_rules);
    ok = ok && h.found();
    if (cfg.json) {
      j["families"].push_back(h);
    } else {
      out << "  [" << f.item << "] " << f.name << ": "
          << (h.found() ? describe(*h.counterexample) : std::string("NO COUNTEREXAMPLE")) << "\n";
    }
  }
  j["additiveTies"] = json::array();
  for (Nat k : {Nat{0}, Nat{1}, Nat{5}}) {
    HuntResult h = find_violation(additive_family(k), RelationKind::FullRoot, cfg.max_size,
                                  RuleId::RecSucc);
    ok = ok && h.found();
    if (cfg.json) {
      j["additiveTies"].push_back(h);
    } else {
      out << "  kappa+" << k << " tie on rec-succ: "
          << (h.found() ? describe(*h.counterexample) : std::string("NONE")) << "\n";
    }
  }
  HuntResult canon = find_violation(canonical_family(), RelationKind::SafeRoot, cfg.max_size);
  ok = ok && !canon.found();
  if (cfg.json) {
    j["measure3"] = canon;
    out << j.dump() << "\n";
  } else {
    out << "  measure3 on safe: "
        << (canon.found() ? describe(*canon.counterexample)
                          : "no violation in " + plural(canon.instances_checked, "instance"))
        << "\n";
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_check_lpo(const CliConfig& cfg, std::ostream& out) {
  std::vector<std::size_t> sizes{5};
  if (cfg.max_size != 5) sizes.push_back(cfg.max_size);
  json searches = json::array();
  bool ok = true;
  std::optional<Precedence> prec;
  for (std::size_t n : sizes) {
    LpoSearchReport r = lpo_search(n);
    ok = ok && r.first.has_value();
    prec = r.first;
    if (cfg.json) {
      searches.push_back(r);
    } else {
      out << "lpo search, instances up to size " << n << " (" << r.instances << "): "
          << r.orienting << " of " << r.precedences_checked << " precedences orient all rules\n";
      if (r.first) out << "  first: " << render(*r.first) << "\n";
    }
  }
  std::optional<HuntResult> head;
  if (prec) {
    head = find_violation(head_precedence_family(*prec), RelationKind::FullRoot, cfg.max_size,
                          RuleId::MergeCancel);
    ok = ok && head->found();
  }
  if (cfg.json) {
    out << json{{"searches", searches}, {"headPrecedence", head ? json(*head) : json(nullptr)}}.dump()
        << "\n";
  } else if (head) {
    out << "same precedence without the subterm clause: "
        << (head->found() ? describe(*head->counterexample) : std::string("NO COUNTEREXAMPLE"))
        << "\n";
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_check_stress(const CliConfig& cfg, std::ostream& out) {
  StressReport r = duplication_stress_check(cfg.max_size);
  bool ok = r.exact_fit && r.strict_drops == 0 && r.instances > 0;
  if (cfg.json) {
    out << json(r).dump() << "\n";
    return ok ? kExitOk : kExitViolation;
  }
  out << "rec-succ instances up to size " << r.max_size << ": " << r.instances << "\n";
  out << "fitted: size(after) - size(before) = " << r.slope << " * size(s) + " << r.intercept
      << (r.exact_fit ? " (exact on every instance)" : " (NOT exact)") << "\n";
  out << "size(after) = size(before) - 1 + size(s) holds on " << r.textbook_form_holds << " of "
      << r.instances << "\n";
  out << "strict drops: " << r.strict_drops << "\n";
  return ok ? kExitOk : kExitViolation;
}

int cmd_check_poly(const CliConfig& cfg, Nat bound, std::ostream& out) {
  PolySearchReport r = poly_search(bound);
  bool ok = r.orienting == 0;
  if (cfg.json) {
    out << json(r).dump() << "\n";
    return ok ? kExitOk : kExitViolation;
  }
  out << "linear interpretations, coefficients 1.." << bound << ", constants 0.." << bound << "\n";
  out << "assignments: " << r.assignments << " (" << r.classes << " rec-succ classes)\n";
  out << "orienting: " << r.orienting << "\n";
  out << "failed within size " << r.scan_size << ": " << r.failed_in_scan
      << " classes; by growing s: " << r.failed_by_growth << " classes (largest witness size "
      << r.largest_witness << ")\n";
  for (const auto& [m, f] : r.examples) {
    out << "  " << render(m) << "\n    " << describe(f.witness) << "  (" << f.lhs << " -> "
        << f.rhs << ")\n";
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_check_kbo(const CliConfig& cfg, Nat bound, std::ostream& out) {
  KboSearchReport r = kbo_search(bound);
  bool ok = r.orienting == 0;
  if (cfg.json) {
    out << json(r).dump() << "\n";
    return ok ? kExitOk : kExitViolation;
  }
  out << "symbol weights 0.." << bound << "\n";
  out << "assignments: " << r.assignments << "\norienting: " << r.orienting << "\n";
  out << "failed within size " << r.scan_size << ": " << r.failed_in_scan
      << "; by growing s: " << r.failed_by_growth << "\n";
  for (const auto& [w, f] : r.examples) {
    out << "  " << render(w) << "\n    " << describe(f.witness) << "  (" << f.lhs << " -> "
        << f.rhs << ")\n";
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_reaches(const std::string& term, const std::string& target, const CliConfig& cfg,
                std::ostream& out) {
  Term t = parse(term);
  Term c = parse(target);
  if (!is_normal_form_safe(c)) {
    throw UsageError("target is not a safe normal form: " + render(c));
  }
  Trace tr = normalize_safe(t);
  bool yes = reaches_target(t, c);
  if (cfg.json) {
    out << json{{"term", t}, {"target", c}, {"reaches", yes}, {"normalForm", tr.normal_form}}.dump()
        << "\n";
  } else {
    out << (yes ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_witness_nonjoin(const CliConfig& cfg, std::size_t budget, std::ostream& out) {
  NonJoinReport r = non_join_witness_full(budget, cfg.fuel);
  if (cfg.json) {
    out << json(r).dump() << "\n";
    return kExitOk;
  }
  auto steps_of = [](const FullRunResult& run) {
    return std::get<FullNormalized>(run).steps.size();
  };
  out << "source: " << render(r.source) << "\n";
  out << "fork (full root):\n";
  out << "  " << rule_name(r.refl.rule) << " -> " << render(r.refl.result) << "\n";
  out << "  " << rule_name(r.diff.rule) << " -> " << render(r.diff.result) << "\n";
  out << "normal forms (full-ctx):\n";
  out << "  " << render(r.refl_normal_form) << "  [" << plural(steps_of(r.refl_run), "step")
      << "]\n";
  out << "  " << render(r.diff_normal_form) << "  [" << plural(steps_of(r.diff_run), "step")
      << "]\n";
  out << "verdict: not joinable (" << render(r.refl_normal_form)
      << " != " << render(r.diff_normal_form) << ", budget " << r.budget << ")\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  std::string relation = "safe";
  std::string term, target, file, family;
  bool trace = false, all_rules = false;
  Nat bound = 3;
  std::size_t nonjoin_budget = 1000;

  CLI::App app{"ko7: rewriting engine for the KO7 operator calculus"};
  app.name("ko7");
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "Emit JSON on stdout");

  auto with_common = [&](CLI::App* c) {
    c->fallthrough();
    return c;
  };
  auto term_cmd = [&](const char* name, const char* help) {
    CLI::App* c = with_common(app.add_subcommand(name, help));
    c->add_option("term", term, "Term in S-expression form");
    c->add_option("--file", file, "Read one term per line");
    return c;
  };

  CLI::App* parse_cmd = term_cmd("parse", "Echo the canonical form of a term");
  CLI::App* step_cmd = term_cmd("step", "List one-step successors");
  step_cmd->add_option("--relation", relation, "safe | full | safe-ctx | full-ctx");
  CLI::App* norm_cmd = term_cmd("normalize", "Reduce to normal form");
  norm_cmd->add_flag("--trace", trace, "Print every step");
  norm_cmd->add_option("--relation", relation, "safe (root) or full (all positions)");
  norm_cmd->add_option("--fuel", cfg.fuel, "Step budget for the full relation");
  CLI::App* measure_cmd = term_cmd("measure", "Print dflag, kappaM and tau");

  CLI::App* check = with_common(app.add_subcommand("check", "Run a sweep or search"));
  check->require_subcommand(1);
  auto check_cmd = [&](const char* name, const char* help) {
    CLI::App* c = with_common(check->add_subcommand(name, help));
    c->add_option("--max-size", cfg.max_size, "Largest term size enumerated");
    return c;
  };
  CLI::App* decrease_cmd = check_cmd("decrease", "Per-step measure decrease on safe root steps");
  CLI::App* lj_cmd = check_cmd("local-join", "Join every fork");
  lj_cmd->add_option("--relation", relation, "safe | safe-ctx");
  lj_cmd->add_option("--budget", cfg.budget, "Terms expanded per side");
  CLI::App* unf_cmd = check_cmd("unique-nf", "Unique normal forms under every reduction order");
  CLI::App* nogo_cmd = check_cmd("nogo", "Counterexamples for the failed measure families (default size 7)");
  nogo_cmd->add_option("--family", family, "Family name (or measure3)");
  nogo_cmd->add_flag("--all-rules", all_rules, "Scan every rule, not just the family's focus");
  CLI::App* lpo_cmd = check_cmd("lpo", "Precedence search for the path order");
  CLI::App* stress_cmd = check_cmd("stress", "Size change across rec-succ");
  CLI::App* poly_cmd = check_cmd("poly", "Exhaustive linear interpretation search");
  poly_cmd->add_option("--bound", bound, "Coefficient bound");
  CLI::App* kbo_cmd = check_cmd("kbo", "Exhaustive symbol weight search");
  kbo_cmd->add_option("--bound", bound, "Weight bound");

  CLI::App* reaches_cmd = with_common(app.add_subcommand("reaches", "Fixed-target reachability"));
  reaches_cmd->add_option("term", term)->required();
  reaches_cmd->add_option("target", target)->required();

  CLI::App* witness = with_common(app.add_subcommand("witness", "Named witnesses"));
  witness->require_subcommand(1);
  CLI::App* nonjoin_cmd = with_common(witness->add_subcommand("nonjoin", "Full-relation non-join"));
  nonjoin_cmd->add_option("--budget", nonjoin_budget, "Terms expanded per side");
  nonjoin_cmd->add_option("--fuel", cfg.fuel, "Normalization fuel");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    cfg.relation = relation_or_throw(relation);
    using TermFn = std::function<int(const Term&, json&, std::ostream&)>;
    auto batch = [&](const TermFn& fn) { return for_each_term(term, file, cfg, out, fn); };
    if (*parse_cmd) {
      return batch([&](const Term& t, json& j, std::ostream& o) { return cmd_parse(t, cfg, j, o); });
    }
    if (*step_cmd) {
      return batch([&](const Term& t, json& j, std::ostream& o) { return cmd_step(t, cfg, j, o); });
    }
    if (*norm_cmd) {
      if (cfg.relation == RelationKind::FullCtx) cfg.relation = RelationKind::FullRoot;
      if (cfg.relation != RelationKind::SafeRoot && cfg.relation != RelationKind::FullRoot) {
        throw UsageError("normalize takes --relation safe or full");
      }
      return batch([&](const Term& t, json& j, std::ostream& o) {
        return cmd_normalize(t, cfg, trace, j, o);
      });
    }
    if (*measure_cmd) {
      return batch(
          [&](const Term& t, json& j, std::ostream& o) { return cmd_measure(t, cfg, j, o); });
    }
    if (*decrease_cmd) return cmd_check_decrease(cfg, out);
    if (*lj_cmd) return cmd_check_local_join(cfg, out);
    if (*unf_cmd) return cmd_check_unique_nf(cfg, out);
    if (*nogo_cmd) {
      if (nogo_cmd->count("--max-size") == 0) cfg.max_size = 7;
      return cmd_check_nogo(cfg, family, all_rules, out);
    }
    if (*lpo_cmd) return cmd_check_lpo(cfg, out);
    if (*stress_cmd) return cmd_check_stress(cfg, out);
    if (*poly_cmd) return cmd_check_poly(cfg, bound, out);
    if (*kbo_cmd) return cmd_check_kbo(cfg, bound, out);
    if (*reaches_cmd) return cmd_reaches(term, target, cfg, out);
    if (*nonjoin_cmd) return cmd_witness_nonjoin(cfg, nonjoin_budget, out);
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace ko7::cli
