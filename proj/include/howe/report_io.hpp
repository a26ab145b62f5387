#pragma once

#include "howe/graded.hpp"
#include "howe/jantzen.hpp"
#include "howe/survey.hpp"

#include <json.hpp>

#include <string>

namespace howe {

using nlohmann::json;

// Rationals and big integers travel as canonical strings ("-3/2", "126").
void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);
void to_json(json& j, const Weight& w);
void from_json(const json& j, Weight& w);
void to_json(json& j, const Root& r);
void from_json(const json& j, Root& r);
void to_json(json& j, const Witness& w);
void from_json(const json& j, Witness& w);
void to_json(json& j, const Verdict& v);
void from_json(const json& j, Verdict& v);
void to_json(json& j, const SweepRow& r);
void from_json(const json& j, SweepRow& r);
void to_json(json& j, const Counterexample& c);
void from_json(const json& j, Counterexample& c);
void to_json(json& j, const SweepParams& p);
void from_json(const json& j, SweepParams& p);
void to_json(json& j, const GradedRow& r);
void from_json(const json& j, GradedRow& r);
void to_json(json& j, const GradedCheck& g);
void from_json(const json& j, GradedCheck& g);

// Wall time is left out unless asked for, so identical runs emit identical bytes.
json report_to_json(const SweepReport& report, bool include_timing = false);
SweepReport report_from_json(const json& j);

// One row per sigma: pair, m, n, p, bound, sigma, tau, verdict, worst pairing.
std::string report_to_csv(const SweepReport& report);

std::string graded_to_csv(const GradedCheck& check);

}  // namespace howe
