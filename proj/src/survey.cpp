#include "howe/survey.hpp"

#include "howe/parallel.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>

namespace howe {

unsigned default_workers() {
  if (const char* env = std::getenv("HOWE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string to_string(PairKind k) { return k == PairKind::U ? "u" : "sp"; }

PairKind pair_kind_from_string(const std::string& s) {
  if (s == "u") return PairKind::U;
  if (s == "sp" || s == "o") return PairKind::SP;
  throw std::invalid_argument("unknown pair kind '" + s + "' (expected u or sp)");
}

bool SweepReport::all_irreducible() const {
  for (const auto& [status, count] : histogram)
    if (status != Status::Irreducible && count > 0) return false;
  return true;
}

bool SweepReport::positive_long_all_nonintegral() const {
  for (const auto& row : rows)
    if (row.positive_integral_long > 0) return false;
  return true;
}

bool SweepReport::has_nonintegral_positive() const {
  for (const auto& row : rows)
    if (row.positive_nonintegral > 0) return true;
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Evaluated {
  SweepRow row;
  std::vector<Counterexample> counterexamples;
};

Evaluated evaluate(const RootSystem& rs, std::string sigma, Weight tau) {
  const Verdict verdict = check_irreducible(rs, tau);
  const Weight shifted = tau + rs.rho();
  Evaluated out;
  out.row.sigma = std::move(sigma);
  out.row.status = verdict.status;
  out.row.worst_pairing = max_noncompact_pairing(rs, tau);
  for (const auto& alpha : rs.positive_noncompact_roots()) {
    const Rational value = pairing(shifted, alpha);
    if (value.sign() <= 0) continue;
    if (!value.is_integer()) ++out.row.positive_nonintegral;
    else if (alpha.norm2() == 4) ++out.row.positive_integral_long;
  }
  for (const auto& w : verdict.witnesses)
    if (!w.rescue) out.counterexamples.push_back({out.row.sigma, tau, w.alpha, w.value});
  out.row.tau = std::move(tau);
  return out;
}

SweepReport assemble(SweepParams params, std::vector<Evaluated> evaluated, Clock::time_point start) {
  SweepReport report;
  report.params = params;
  report.total = evaluated.size();
  report.histogram = {{Status::Irreducible, 0}, {Status::Reducible, 0}, {Status::Unknown, 0}};
  report.rows.reserve(evaluated.size());
  for (auto& e : evaluated) {
    ++report.histogram[e.row.status];
    report.rows.push_back(std::move(e.row));
    for (auto& c : e.counterexamples) report.counterexamples.push_back(std::move(c));
  }
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace

SweepReport sweep_u(int m, int n, int p, int bound, unsigned workers) {
  const auto start = Clock::now();
  const auto sigmas = enumerate_sigma_u(p, m, n, bound);
  const auto rs = build_gl_root_system(n, m);
  auto evaluated = parallel_map(sigmas.size(), workers, [&](std::size_t i) {
    const auto& s = sigmas[i];
    return evaluate(rs, s.label(), to_highest_gl(theta_u_lowest(s), m, n));
  });
  return assemble({PairKind::U, m, n, p, bound, std::nullopt}, std::move(evaluated), start);
}

SweepReport sweep_sp(int n, int p, int bound, std::optional<int> epsilon, unsigned workers) {
  if (epsilon && *epsilon != 1 && *epsilon != -1)
    throw std::invalid_argument("sweep_sp: epsilon filter must be +1 or -1");
  const auto start = Clock::now();
  std::vector<SignedWeight> sigmas;
  for (auto& s : enumerate_sigma_o(n, p, bound))
    if (!epsilon || s.epsilon == *epsilon) sigmas.push_back(std::move(s));
  const auto rs = build_sp_root_system(p);
  auto evaluated = parallel_map(sigmas.size(), workers, [&](std::size_t i) {
    const auto& s = sigmas[i];
    return evaluate(rs, s.label(), to_highest_sp(theta_o_lowest(s)));
  });
  return assemble({PairKind::SP, 0, n, p, bound, epsilon}, std::move(evaluated), start);
}

std::vector<std::string> verify_report(const SweepReport& report) {
  std::vector<std::string> problems;
  std::size_t counted = 0;
  for (const auto& [status, count] : report.histogram) counted += count;
  if (counted != report.total || report.rows.size() != report.total)
    problems.push_back("histogram or row count disagrees with total");
  if (report.counterexamples.empty() != report.all_irreducible())
    problems.push_back("counterexample list and histogram disagree");
  const auto rs = report.params.pair == PairKind::U
                      ? build_gl_root_system(report.params.n, report.params.m)
                      : build_sp_root_system(report.params.p);
  for (const auto& c : report.counterexamples) {
    const Verdict v = check_irreducible(rs, c.tau);
    bool found = false;
    for (const auto& w : v.witnesses)
      found = found || (w.alpha == c.alpha && w.value == c.value && !w.rescue);
    if (v.status == Status::Irreducible || !found)
      problems.push_back("counterexample " + c.sigma + " at " + c.alpha.label() + " does not re-verify");
  }
  return problems;
}

ClosedFormTable closed_form_sp_pairings(int n, int p, int k, const std::vector<int>& a, int epsilon) {
  if (static_cast<std::size_t>(k) != a.size())
    throw std::invalid_argument("closed_form_sp_pairings: k does not match the length of a");
  validate(SignedWeight{a, epsilon, n, p});

  // a_{p+1-i} for i in the trailing block p-k < i <= p.
  const auto a_at = [&](int i) { return Rational(a[static_cast<std::size_t>(p - i)]); };
  const Rational half_n(n, 2);
  const auto gap = [&](const std::string& what) {
    return CaseGapError("no case branch for " + what + " (n=" + std::to_string(n) +
                        ", p=" + std::to_string(p) + ", k=" + std::to_string(k) +
                        ", eps=" + std::to_string(epsilon) + ")");
  };

  ClosedFormTable out;
  if (epsilon == 1) {
    const int head = p - k;
    for (int i = 1; i <= p; ++i) {
      if (1 <= i && i <= head) out.long_roots.push_back(Rational(p + 1 - i) - half_n);
      else if (head < i && i <= p) out.long_roots.push_back(Rational(p + 1 - i) - half_n - a_at(i));
      else throw gap("2e" + std::to_string(i));
    }
    for (int i = 1; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j) {
        const Rational base(2 * p + 2 - i - j - n);
        Rational v;
        if (j <= head) v = base;
        else if (i <= head && head < j) v = base - a_at(j);
        else if (head < i) v = base - a_at(i) - a_at(j);
        else throw gap("e" + std::to_string(i) + "+e" + std::to_string(j));
        out.sums.push_back({i, j, v});
      }
    return out;
  }

  // epsilon = -1: blocks [1, p+k-n], (p+k-n, p-k], (p-k, p].
  const int first = p + k - n;
  const int second = p - k;
  const auto in1 = [&](int i) { return 1 <= i && i <= first; };
  const auto in2 = [&](int i) { return first < i && i <= second; };
  const auto in3 = [&](int i) { return second < i && i <= p; };
  for (int i = 1; i <= p; ++i) {
    if (in1(i)) out.long_roots.push_back(Rational(p + 1 - i) - half_n);
    else if (in2(i)) out.long_roots.push_back(Rational(p - i) - half_n);
    else if (in3(i)) out.long_roots.push_back(Rational(p + 1 - i) - half_n - a_at(i));
    else throw gap("2e" + std::to_string(i));
  }
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) {
      Rational v;
      if (in1(i) && in1(j)) v = Rational(2 * p + 2 - i - j - n);
      else if (in2(i) && in2(j)) v = Rational(2 * p - i - j - n);
      else if (in3(i) && in3(j)) v = Rational(2 * p + 2 - i - j - n) - a_at(i) - a_at(j);
      else if (in1(i) && in2(j)) v = Rational(2 * p + 1 - i - j - n);
      else if (in2(i) && in3(j)) v = Rational(2 * p + 1 - i - j - n) - a_at(j);
      else if (in1(i) && in3(j)) v = Rational(2 * p + 2 - i - j - n) - a_at(j);
      else throw gap("e" + std::to_string(i) + "+e" + std::to_string(j));
      out.sums.push_back({i, j, v});
    }
  return out;
}

CrosscheckResult crosscheck_closed_form(int n, int p, int bound, const ClosedFormFn& table) {
  CrosscheckResult out;
  const auto rs = build_sp_root_system(p);
  const auto root_for = [&](int i, int j) {
    std::vector<int> c(static_cast<std::size_t>(p), 0);
    c[static_cast<std::size_t>(i - 1)] += i == j ? 2 : 1;
    if (i != j) c[static_cast<std::size_t>(j - 1)] += 1;
    return *rs.find(c);
  };
  for (const auto& s : enumerate_sigma_o(n, p, bound)) {
    const Weight shifted = to_highest_sp(theta_o_lowest(s)) + rs.rho();
    const ClosedFormTable t = table(n, p, static_cast<int>(s.a.size()), s.a, s.epsilon);
    const auto compare = [&](const Root& alpha, const Rational& tabled) {
      ++out.checked;
      const Rational generic = pairing(shifted, alpha);
      if (generic != tabled) out.mismatches.push_back({s.label(), alpha.label(), tabled, generic});
    };
    if (t.long_roots.size() != static_cast<std::size_t>(p) ||
        t.sums.size() != static_cast<std::size_t>(p * (p - 1) / 2)) {
      out.mismatches.push_back({s.label(), "table shape", Rational(0), Rational(0)});
      continue;
    }
    for (int i = 1; i <= p; ++i) compare(root_for(i, i), t.long_roots[static_cast<std::size_t>(i - 1)]);
    for (const auto& e : t.sums) compare(root_for(e.i, e.j), e.value);
  }
  out.ok = out.mismatches.empty();
  return out;
}

namespace {

template <typename Visit>
void for_each_relaxed(int m, int n, int p, int bound, Visit visit) {
  const Rational half_p(p, 2);
  const auto as = decreasing_sequences(static_cast<std::size_t>(m), 0, bound);
  const auto bs = decreasing_sequences(static_cast<std::size_t>(n), -bound, 0);
  for (const auto& b : bs)
    for (const auto& a : as) {
      std::vector<Rational> tau;
      tau.reserve(static_cast<std::size_t>(n + m));
      for (int bi : b) tau.push_back(Rational(bi) - half_p);
      for (int aj : a) tau.push_back(Rational(aj) + half_p);
      UnitarySigma label{a, b, p, m, n};
      visit(label.label(), Weight(std::move(tau)));
    }
}

}  // namespace

std::vector<Counterexample> find_counterexamples(int m, int n, int p, int bound) {
  if (m < 1 || n < 1 || p < 1 || bound < 0)
    throw std::invalid_argument("find_counterexamples: need m, n, p >= 1 and bound >= 0");
  const auto rs = build_gl_root_system(n, m);
  std::vector<Counterexample> out;
  for_each_relaxed(m, n, p, bound, [&](const std::string& sigma, const Weight& tau) {
    if (!dominance_check(rs, tau)) return;
    const Verdict v = check_irreducible(rs, tau);
    if (v.status != Status::Reducible) return;
    for (const auto& w : v.witnesses)
      if (!w.rescue) out.push_back({sigma, tau, w.alpha, w.value});
  });
  return out;
}

std::vector<Weight> relaxed_irreducible(int m, int n, int p, int bound) {
  const auto rs = build_gl_root_system(n, m);
  std::vector<Weight> out;
  for_each_relaxed(m, n, p, bound, [&](const std::string&, const Weight& tau) {
    if (dominance_check(rs, tau) && check_irreducible(rs, tau).status == Status::Irreducible)
      out.push_back(tau);
  });
  return out;
}

}  // namespace howe
