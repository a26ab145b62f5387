#include "howe/report_io.hpp"

#include <sstream>

namespace howe {

void to_json(json& j, const Rational& r) { j = r.to_string(); }
void from_json(const json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(json& j, const Weight& w) {
  j = json::array();
  for (const auto& c : w) j.push_back(c.to_string());
}

void from_json(const json& j, Weight& w) {
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(c.get<Rational>());
  w = Weight(std::move(coords));
}

void to_json(json& j, const Root& r) {
  j = json{{"coords", r.coords}, {"label", r.label()}, {"positive", r.positive}, {"compact", r.compact}};
}

void from_json(const json& j, Root& r) {
  j.at("coords").get_to(r.coords);
  j.at("positive").get_to(r.positive);
  j.at("compact").get_to(r.compact);
}

void to_json(json& j, const Witness& w) {
  j = json{{"alpha", w.alpha}, {"value", w.value}, {"rescue", nullptr}};
  if (w.rescue) j["rescue"] = *w.rescue;
}

void from_json(const json& j, Witness& w) {
  j.at("alpha").get_to(w.alpha);
  j.at("value").get_to(w.value);
  if (j.at("rescue").is_null()) w.rescue.reset();
  else w.rescue = j.at("rescue").get<Root>();
}

void to_json(json& j, const Verdict& v) {
  j = json{{"status", to_string(v.status)}, {"witnesses", v.witnesses}};
}

void from_json(const json& j, Verdict& v) {
  v.status = status_from_string(j.at("status").get<std::string>());
  j.at("witnesses").get_to(v.witnesses);
}

void to_json(json& j, const SweepRow& r) {
  j = json{{"sigma", r.sigma},
           {"tau", r.tau},
           {"verdict", to_string(r.status)},
           {"worst_pairing", r.worst_pairing},
           {"positive_nonintegral", r.positive_nonintegral},
           {"positive_integral_long", r.positive_integral_long}};
}

void from_json(const json& j, SweepRow& r) {
  j.at("sigma").get_to(r.sigma);
  j.at("tau").get_to(r.tau);
  r.status = status_from_string(j.at("verdict").get<std::string>());
  j.at("worst_pairing").get_to(r.worst_pairing);
  j.at("positive_nonintegral").get_to(r.positive_nonintegral);
  j.at("positive_integral_long").get_to(r.positive_integral_long);
}

void to_json(json& j, const Counterexample& c) {
  j = json{{"sigma", c.sigma}, {"tau", c.tau}, {"alpha", c.alpha}, {"value", c.value}};
}

void from_json(const json& j, Counterexample& c) {
  j.at("sigma").get_to(c.sigma);
  j.at("tau").get_to(c.tau);
  j.at("alpha").get_to(c.alpha);
  j.at("value").get_to(c.value);
}

void to_json(json& j, const SweepParams& p) {
  j = json{{"pair", to_string(p.pair)}, {"m", p.m}, {"n", p.n}, {"p", p.p}, {"bound", p.bound},
           {"bound_semantics", "entrywise"}, {"epsilon", nullptr}};
  if (p.epsilon) j["epsilon"] = *p.epsilon;
}

void from_json(const json& j, SweepParams& p) {
  p.pair = pair_kind_from_string(j.at("pair").get<std::string>());
  j.at("m").get_to(p.m);
  j.at("n").get_to(p.n);
  j.at("p").get_to(p.p);
  j.at("bound").get_to(p.bound);
  if (j.at("epsilon").is_null()) p.epsilon.reset();
  else p.epsilon = j.at("epsilon").get<int>();
}

void to_json(json& j, const GradedRow& r) {
  j = json{{"degree", r.degree}, {"lhs", r.lhs.get_str()}, {"rhs", r.rhs.get_str()}, {"alt", r.alt.get_str()}};
}

void from_json(const json& j, GradedRow& r) {
  j.at("degree").get_to(r.degree);
  r.lhs = BigInt(j.at("lhs").get<std::string>());
  r.rhs = BigInt(j.at("rhs").get<std::string>());
  r.alt = BigInt(j.at("alt").get<std::string>());
}

void to_json(json& j, const GradedCheck& g) {
  j = json{{"equal", g.equal}, {"dim_p", g.dim_p}, {"dim_p_plus", g.dim_p_plus}, {"rows", g.rows}};
}

void from_json(const json& j, GradedCheck& g) {
  j.at("equal").get_to(g.equal);
  j.at("dim_p").get_to(g.dim_p);
  j.at("dim_p_plus").get_to(g.dim_p_plus);
  j.at("rows").get_to(g.rows);
}

json report_to_json(const SweepReport& report, bool include_timing) {
  json histogram = json::object();
  for (const auto& [status, count] : report.histogram) histogram[to_string(status)] = count;
  json j{{"params", report.params},
         {"total", report.total},
         {"histogram", histogram},
         {"all_irreducible", report.all_irreducible()},
         {"positive_long_all_nonintegral", report.positive_long_all_nonintegral()},
         {"nonintegral_positive", report.has_nonintegral_positive()},
         {"counterexamples", report.counterexamples},
         {"rows", report.rows}};
  if (include_timing) j["wall_seconds"] = report.wall_seconds;
  return j;
}

SweepReport report_from_json(const json& j) {
  SweepReport r;
  j.at("params").get_to(r.params);
  j.at("total").get_to(r.total);
  for (const auto& [key, value] : j.at("histogram").items())
    r.histogram[status_from_string(key)] = value.get<std::size_t>();
  j.at("counterexamples").get_to(r.counterexamples);
  j.at("rows").get_to(r.rows);
  if (j.contains("wall_seconds")) j.at("wall_seconds").get_to(r.wall_seconds);
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "pair,m,n,p,bound,sigma,tau,verdict,worst_pairing\n";
  const auto& prm = report.params;
  for (const auto& row : report.rows) {
    os << to_string(prm.pair) << ',' << prm.m << ',' << prm.n << ',' << prm.p << ',' << prm.bound << ','
       << csv_field(row.sigma) << ',' << csv_field(row.tau.to_string()) << ',' << to_string(row.status)
       << ',' << row.worst_pairing << '\n';
  }
  return os.str();
}

std::string graded_to_csv(const GradedCheck& check) {
  std::ostringstream os;
  os << "degree,lhs,rhs,alt\n";
  for (const auto& r : check.rows) os << r.degree << ',' << r.lhs << ',' << r.rhs << ',' << r.alt << '\n';
  return os.str();
}

}  // namespace howe
