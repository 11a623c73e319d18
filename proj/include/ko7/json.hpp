#pragma once

// JSON forms for terms, witnesses, traces and reports.
//
//   term       {"k": keyword, "c": [term...]}
//   witness    {"rule": name, "pos": [i...], "from": term, "to": term}
//   measure3   [dflag, [kappa...], tau]
//   trace      {"source": term, "steps": [{"witness", "before", "after"}], "normalForm": term}

#include <json.hpp>

#include "ko7/confluence.hpp"
#include "ko7/measure.hpp"
#include "ko7/nogo.hpp"
#include "ko7/normalize.hpp"
#include "ko7/rewrite.hpp"
#include "ko7/term.hpp"

namespace ko7 {

using nlohmann::json;

void to_json(json& j, const Term& t);
void from_json(const json& j, Term& t);

void to_json(json& j, const Position& p);
void from_json(const json& j, Position& p);

void to_json(json& j, const StepWitness& w);
void from_json(const json& j, StepWitness& w);

void to_json(json& j, const NatMultiset& m);
void from_json(const json& j, NatMultiset& m);

void to_json(json& j, const Measure3& m);
void from_json(const json& j, Measure3& m);

void to_json(json& j, const TraceStep& s);
void from_json(const json& j, TraceStep& s);

void to_json(json& j, const Trace& t);
void from_json(const json& j, Trace& t);

void to_json(json& j, const FullRunResult& r);
void to_json(json& j, const JoinResult& r);
void to_json(json& j, const Fork& f);
void to_json(json& j, const DecreaseReport& r);
void to_json(json& j, const LocalJoinReport& r);
void to_json(json& j, const UniqueNFReport& r);
void to_json(json& j, const CoverageReport& r);
void to_json(json& j, const NonJoinReport& r);
void to_json(json& j, const Value& v);
void to_json(json& j, const CounterexampleReport& r);
void to_json(json& j, const HuntResult& r);
void to_json(json& j, const StressReport& r);
void to_json(json& j, const Precedence& p);
void to_json(json& j, const LpoSearchReport& r);
void to_json(json& j, const OrientationFailure& f);
void to_json(json& j, const PolySearchReport& r);
void to_json(json& j, const KboSearchReport& r);

}  // namespace ko7
