#pragma once

#include "howe/rootsys.hpp"
#include "howe/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace howe {

enum class Status { Irreducible, Reducible, Unknown };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

// One non-compact positive root whose shifted pairing is a positive integer,
// with the rescuing root if one was found.
struct Witness {
  Root alpha;
  Rational value;
  std::optional<Root> rescue;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  Status status = Status::Irreducible;
  std::vector<Witness> witnesses;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Jantzen's criterion for N(lambda) = U(g) (x)_{U(q)} F_lambda:
// every alpha in Delta_n^+ with (lambda+rho)_alpha in Z_{>0} needs some gamma in
// Delta_n with (lambda+rho)_gamma = 0 and s_alpha(gamma) in Delta_c. Failure
// means Reducible in type A and Unknown otherwise.
Verdict check_irreducible(const RootSystem& rs, const Weight& lambda);

// (lambda)_alpha >= 0 for every positive compact root.
bool dominance_check(const RootSystem& rs, const Weight& lambda);

// Largest (lambda+rho)_alpha over Delta_n^+.
Rational max_noncompact_pairing(const RootSystem& rs, const Weight& lambda);

}  // namespace howe
