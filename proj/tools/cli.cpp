#include "cli.hpp"

#include "howe/graded.hpp"
#include "howe/jantzen.hpp"
#include "howe/parallel.hpp"
#include "howe/report_io.hpp"
#include "howe/rootsys.hpp"
#include "howe/survey.hpp"
#include "howe/theta.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <stdexcept>

namespace howe::cli {

namespace {

enum class Format { Pretty, Json, Csv };

struct RunConfig {
  std::vector<int> gl;  // n m
  int sp = 0;
  std::vector<int> o;   // m n for the graded o(m,n) check
  std::string pair;
  int m = 0;
  int n = 0;
  int p = 0;
  std::string a;
  std::string b;
  int eps = 0;
  bool relaxed = false;
  std::string weight;
  int bound = 0;
  int degree = 0;
  int dimE = 1;
  int dimF = 1;
  std::string format = "pretty";
  std::string out_path;
  bool timing = false;
  bool counterexamples = false;
  bool crosscheck = false;
};

// Raised for parameter combinations CLI11 cannot express.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    piece.erase(std::remove(piece.begin(), piece.end(), ' '), piece.end());
    int v = 0;
    const auto* first = piece.data();
    const auto* last = piece.data() + piece.size();
    if (!piece.empty() && *first == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (piece.empty() || res.ec != std::errc() || res.ptr != last)
      throw UsageError("malformed integer list '" + text + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Format parse_format(const RunConfig& cfg) {
  if (cfg.format == "json") return Format::Json;
  if (cfg.format == "csv") return Format::Csv;
  return Format::Pretty;
}

RootSystem system_from(const RunConfig& cfg) {
  const bool has_gl = !cfg.gl.empty();
  const bool has_sp = cfg.sp != 0;
  if (has_gl == has_sp) throw UsageError("give exactly one of --gl N M or --sp P");
  return has_gl ? build_gl_root_system(cfg.gl[0], cfg.gl[1]) : build_sp_root_system(cfg.sp);
}

std::optional<std::size_t> block_split(const RootSystem& rs) {
  if (rs.kind() == RootKind::GL) return static_cast<std::size_t>(rs.first_block());
  return std::nullopt;
}

void write_output(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + cfg.out_path + "' for writing");
  f << payload;
  if (!f) throw std::runtime_error("write to '" + cfg.out_path + "' failed");
}

int cmd_rho(const RunConfig& cfg, std::ostream& out) {
  const auto rs = system_from(cfg);
  if (parse_format(cfg) == Format::Json) {
    out << json{{"system", rs.name()}, {"rho", rs.rho()}}.dump() << '\n';
  } else {
    out << rs.rho().to_string() << '\n';
  }
  return kOk;
}

int cmd_theta(const RunConfig& cfg, std::ostream& out) {
  Weight lowest;
  Weight highest;
  std::string sigma;
  std::optional<std::size_t> low_split;
  std::optional<std::size_t> high_split;
  if (cfg.pair == "u") {
    if (cfg.eps != 0) throw UsageError("--eps applies to --pair o only");
    UnitarySigma s{parse_int_list(cfg.a), parse_int_list(cfg.b), cfg.p, cfg.m, cfg.n};
    lowest = theta_u_lowest(s, cfg.relaxed);
    highest = to_highest_gl(lowest, cfg.m, cfg.n);
    sigma = s.label();
    low_split = static_cast<std::size_t>(cfg.m);
    high_split = static_cast<std::size_t>(cfg.n);
  } else {
    if (!cfg.b.empty()) throw UsageError("--b applies to --pair u only");
    if (cfg.relaxed) throw UsageError("--relaxed applies to --pair u only");
    SignedWeight s{parse_int_list(cfg.a), cfg.eps == 0 ? 1 : cfg.eps, cfg.n, cfg.p};
    lowest = theta_o_lowest(s);
    highest = to_highest_sp(lowest);
    sigma = s.label();
  }
  if (parse_format(cfg) == Format::Json) {
    out << json{{"pair", cfg.pair}, {"sigma", sigma}, {"lowest", lowest}, {"highest", highest}}.dump()
        << '\n';
    return kOk;
  }
  out << "sigma: " << sigma << (cfg.relaxed ? " (relaxed)" : "") << '\n';
  out << "lowest: (" << lowest.to_string(low_split) << ")\n";
  out << "highest: (" << highest.to_string(high_split) << ")\n";
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const auto rs = system_from(cfg);
  const Weight lambda = Weight::parse(cfg.weight);
  const Verdict v = check_irreducible(rs, lambda);
  const bool dominant = dominance_check(rs, lambda);
  if (parse_format(cfg) == Format::Json) {
    out << json{{"system", rs.name()}, {"weight", lambda}, {"dominant", dominant}, {"verdict", v}}.dump()
        << '\n';
    return kOk;
  }
  out << to_string(v.status) << '\n';
  out << "system: " << rs.name() << "  weight: (" << lambda.to_string(block_split(rs)) << ")"
      << "  dominant: " << (dominant ? "yes" : "no") << '\n';
  out << "lambda+rho: (" << (lambda + rs.rho()).to_string(block_split(rs)) << ")\n";
  if (v.witnesses.empty()) out << "no non-compact positive root pairs to a positive integer\n";
  for (const auto& w : v.witnesses) {
    out << "  alpha = " << w.alpha.label() << "  value = " << w.value
        << "  rescue = " << (w.rescue ? w.rescue->label() : std::string("none")) << '\n';
  }
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const unsigned workers = default_workers();
  SweepReport report;
  std::string summary;
  std::vector<std::string> problems;
  std::optional<json> extra;
  if (cfg.pair == "u") {
    if (cfg.eps != 0) throw UsageError("--eps applies to --pair sp only");
    if (cfg.crosscheck) throw UsageError("--crosscheck applies to --pair sp only");
    report = sweep_u(cfg.m, cfg.n, cfg.p, cfg.bound, workers);
    summary = std::string("all irreducible: ") + (report.all_irreducible() ? "true" : "false");
    if (cfg.counterexamples) {
      const auto found = find_counterexamples(cfg.m, cfg.n, cfg.p, cfg.bound);
      summary += "; relaxed counterexamples: " + std::to_string(found.size());
      extra = json{{"relaxed_counterexamples", found}};
    }
  } else {
    if (cfg.counterexamples) throw UsageError("--counterexamples applies to --pair u only");
    std::optional<int> eps;
    if (cfg.eps != 0) eps = cfg.eps;
    report = sweep_sp(cfg.n, cfg.p, cfg.bound, eps, workers);
    summary = std::string("all irreducible: ") + (report.all_irreducible() ? "true" : "false") +
              "; non-integral rescues: " + (report.has_nonintegral_positive() ? "yes" : "no");
    if (cfg.crosscheck) {
      const auto cc = crosscheck_closed_form(cfg.n, cfg.p, cfg.bound);
      summary += "; closed form mismatches: " + std::to_string(cc.mismatches.size());
      for (const auto& mm : cc.mismatches)
        problems.push_back("closed form mismatch at " + mm.sigma + ", " + mm.root);
    }
  }
  const auto verified = verify_report(report);
  problems.insert(problems.end(), verified.begin(), verified.end());

  const Format fmt = !cfg.out_path.empty() && cfg.format == "pretty"
                         ? (cfg.out_path.ends_with(".csv") ? Format::Csv : Format::Json)
                         : parse_format(cfg);
  std::string payload;
  if (fmt == Format::Json) {
    json j = report_to_json(report, cfg.timing);
    if (extra) j.update(*extra);
    payload = j.dump(2) + "\n";
  } else if (fmt == Format::Csv) {
    payload = report_to_csv(report);
  }
  if (!payload.empty()) write_output(cfg, payload, out);
  if (fmt == Format::Pretty || !cfg.out_path.empty()) {
    out << summary << '\n';
    if (fmt == Format::Pretty) {
      out << "sigma count: " << report.total << '\n';
      for (const auto& [status, count] : report.histogram) out << "  " << to_string(status) << ": " << count << '\n';
      for (const auto& c : report.counterexamples)
        out << "  counterexample " << c.sigma << "  tau = (" << c.tau.to_string() << ")  alpha = "
            << c.alpha.label() << "  value = " << c.value << '\n';
      if (cfg.timing) out << "wall seconds: " << report.wall_seconds << '\n';
    }
  }
  for (const auto& p : problems) err << "invariant failure: " << p << '\n';
  return problems.empty() ? kOk : kInvariantFailure;
}

int cmd_graded(const RunConfig& cfg, std::ostream& out) {
  const bool has_o = !cfg.o.empty();
  const bool has_sp = cfg.sp != 0;
  if (has_o == has_sp) throw UsageError("give exactly one of --o M N or --sp P");
  const GradedCheck check = has_o ? check_graded_dims_o(cfg.o[0], cfg.o[1], cfg.dimE, cfg.degree)
                                  : check_graded_dims_sp(cfg.sp, cfg.dimE, cfg.dimF, cfg.degree);
  const Format fmt = parse_format(cfg);
  if (fmt == Format::Json) {
    write_output(cfg, json(check).dump(2) + "\n", out);
  } else if (fmt == Format::Csv) {
    write_output(cfg, graded_to_csv(check), out);
  } else {
    out << "equal: " << (check.equal ? "true" : "false") << '\n';
    out << "dim p = " << check.dim_p << ", dim p+ = " << check.dim_p_plus << '\n';
    for (const auto& r : check.rows)
      out << "  t=" << r.degree << "  " << r.lhs << "  " << r.rhs << "  " << r.alt << '\n';
  }
  if (fmt != Format::Pretty && !cfg.out_path.empty())
    out << "equal: " << (check.equal ? "true" : "false") << '\n';
  return check.equal ? kOk : kInvariantFailure;
}

void add_format_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  sub->add_option("--out", cfg.out_path, "Write the report to this path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Howe duality weights, Jantzen irreducibility and graded dimension checks", "howe"};
  app.set_config("--config", "", "TOML file mirroring the command-line flags");
  app.require_subcommand(1);

  auto* rho = app.add_subcommand("rho", "Print rho for GL(n,m) or SP(p)");
  auto* rho_gl = rho->add_option("--gl", cfg.gl, "Blocks n m")->expected(2);
  auto* rho_sp = rho->add_option("--sp", cfg.sp, "Rank p")->check(CLI::PositiveNumber);
  rho_gl->excludes(rho_sp);
  add_format_options(rho, cfg);

  auto* theta = app.add_subcommand("theta", "Apply a duality correspondence to sigma");
  theta->add_option("--pair", cfg.pair, "u for (U(p),U(m,n)); o for (O(n),Sp(2p))")
      ->required()
      ->check(CLI::IsMember({"u", "o", "sp"}));
  theta->add_option("--m", cfg.m);
  theta->add_option("--n", cfg.n)->required();
  theta->add_option("--p", cfg.p)->required();
  theta->add_option("--a", cfg.a, "Nonzero a parts, comma separated");
  theta->add_option("--b", cfg.b, "Nonzero b parts, comma separated");
  theta->add_option("--eps", cfg.eps, "+1 or -1")->check(CLI::IsMember({-1, 1}));
  theta->add_flag("--relaxed", cfg.relaxed, "Drop k+l <= p and allow zero parts");
  add_format_options(theta, cfg);

  auto* check = app.add_subcommand("check", "Decide irreducibility of N(lambda)");
  auto* check_gl = check->add_option("--gl", cfg.gl, "Blocks n m")->expected(2);
  auto* check_sp = check->add_option("--sp", cfg.sp, "Rank p")->check(CLI::PositiveNumber);
  check_gl->excludes(check_sp);
  check->add_option("--weight", cfg.weight, "Comma-separated exact rationals")->required();
  add_format_options(check, cfg);

  auto* sweep = app.add_subcommand("sweep", "Run the criterion over every admissible sigma");
  sweep->add_option("--pair", cfg.pair)->required()->check(CLI::IsMember({"u", "sp", "o"}));
  sweep->add_option("--m", cfg.m);
  sweep->add_option("--n", cfg.n)->required();
  sweep->add_option("--p", cfg.p)->required();
  sweep->add_option("--bound", cfg.bound, "Entrywise bound B")->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("--eps", cfg.eps, "Restrict to one sign (sp only)")->check(CLI::IsMember({-1, 1}));
  sweep->add_flag("--timing", cfg.timing, "Include wall time in the output");
  sweep->add_flag("--counterexamples", cfg.counterexamples, "Also search the relaxed grid (u only)");
  sweep->add_flag("--crosscheck", cfg.crosscheck, "Also compare the closed-form tables (sp only)");
  add_format_options(sweep, cfg);

  auto* graded = app.add_subcommand("graded", "Compare graded dimensions of the filtrations");
  auto* graded_o = graded->add_option("--o", cfg.o, "o(m,n): m n")->expected(2);
  auto* graded_sp = graded->add_option("--sp", cfg.sp, "sp(2p): p")->check(CLI::PositiveNumber);
  graded_o->excludes(graded_sp);
  graded->add_option("--dimE", cfg.dimE)->check(CLI::PositiveNumber);
  graded->add_option("--dimF", cfg.dimF)->check(CLI::PositiveNumber);
  graded->add_option("--N", cfg.degree, "Top filtration degree")->check(CLI::NonNegativeNumber);
  add_format_options(graded, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  if (cfg.pair == "sp" && theta->parsed()) cfg.pair = "o";
  if (cfg.pair == "o" && sweep->parsed()) cfg.pair = "sp";
  try {
    if ((theta->parsed() || sweep->parsed()) && (cfg.pair == "u") && cfg.m == 0)
      throw UsageError("--m is required for --pair u");
    if (rho->parsed()) return cmd_rho(cfg, out);
    if (theta->parsed()) return cmd_theta(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out, err);
    if (graded->parsed()) return cmd_graded(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace howe::cli
