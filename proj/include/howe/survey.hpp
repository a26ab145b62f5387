#pragma once

#include "howe/jantzen.hpp"
#include "howe/rootsys.hpp"
#include "howe/theta.hpp"
#include "howe/weight.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace howe {

enum class PairKind { U, SP };

std::string to_string(PairKind k);
PairKind pair_kind_from_string(const std::string& s);

struct SweepRow {
  std::string sigma;
  Weight tau;
  Status status = Status::Irreducible;
  Rational worst_pairing;          // max (tau+rho)_alpha over Delta_n^+
  int positive_nonintegral = 0;    // alphas in Delta_n^+ with positive non-integral pairing
  int positive_integral_long = 0;  // long alphas with pairing in Z_{>0}
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct Counterexample {
  std::string sigma;
  Weight tau;
  Root alpha;
  Rational value;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SweepParams {
  PairKind pair = PairKind::U;
  int m = 0;  // unused for SP
  int n = 1;
  int p = 1;
  int bound = 0;
  std::optional<int> epsilon;  // SP only; nullopt means both signs
  friend bool operator==(const SweepParams&, const SweepParams&) = default;
};

struct SweepReport {
  SweepParams params;
  std::size_t total = 0;
  std::map<Status, std::size_t> histogram;
  std::vector<Counterexample> counterexamples;
  std::vector<SweepRow> rows;
  double wall_seconds = 0.0;

  bool all_irreducible() const;
  // No long root ever pairs to a positive integer.
  bool positive_long_all_nonintegral() const;
  // Some positive pairing was non-integral, so integrality did the rescuing.
  bool has_nonintegral_positive() const;

  // Equality ignores wall time.
  friend bool operator==(const SweepReport& a, const SweepReport& b) {
    return a.params == b.params && a.total == b.total && a.histogram == b.histogram &&
           a.counterexamples == b.counterexamples && a.rows == b.rows;
  }
};

// tau = to_highest_gl(theta_u_lowest(sigma)) checked on GL(n,m), for every sigma
// from enumerate_sigma_u.
SweepReport sweep_u(int m, int n, int p, int bound, unsigned workers = 1);

// tau = to_highest_sp(theta_o_lowest(sigma)) checked on SP(p).
SweepReport sweep_sp(int n, int p, int bound, std::optional<int> epsilon = std::nullopt,
                     unsigned workers = 1);

// Problems with a report's internal consistency: histogram/counterexample
// agreement and re-verification of each counterexample. Empty when sound.
std::vector<std::string> verify_report(const SweepReport& report);

struct SumEntry {
  int i = 0;  // 1-based, i < j
  int j = 0;
  Rational value;
  friend bool operator==(const SumEntry&, const SumEntry&) = default;
};

struct ClosedFormTable {
  std::vector<Rational> long_roots;  // (tau+rho)_{2e_i}, i = 1..p
  std::vector<SumEntry> sums;        // (tau+rho)_{e_i+e_j}, i < j
};

class CaseGapError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Piecewise case formulas for the non-compact positive pairings of
// tau + rho on sp(2p), for the epsilon = +1 and epsilon = -1 tables.
ClosedFormTable closed_form_sp_pairings(int n, int p, int k, const std::vector<int>& a, int epsilon);

using ClosedFormFn = std::function<ClosedFormTable(int, int, int, const std::vector<int>&, int)>;

struct Mismatch {
  std::string sigma;
  std::string root;
  Rational table_value;
  Rational generic_value;
};

struct CrosscheckResult {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
};

// Compares the case tables against generic pairings of
// to_highest_sp(theta_o_lowest(sigma)) + rho for every enumerated sigma.
CrosscheckResult crosscheck_closed_form(int n, int p, int bound,
                                        const ClosedFormFn& table = closed_form_sp_pairings);

// All tau = (b - p/2) (+) (a + p/2) with a in [0,B]^m, b in [-B,0]^n weakly
// decreasing (zeros allowed, k+l <= p not imposed) that are dominant and
// Reducible on GL(n,m). One entry per unrescued witness.
std::vector<Counterexample> find_counterexamples(int m, int n, int p, int bound);

// Irreducible weights on the same relaxed grid.
std::vector<Weight> relaxed_irreducible(int m, int n, int p, int bound);

}  // namespace howe
