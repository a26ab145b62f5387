#pragma once

#include "howe/weight.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace howe {

// Raised when a sigma parameter violates the correspondence constraints.
// what() names the violated inequality.
class ConstraintError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Highest weight of U(p) in the (U(p), U(m,n)) correspondence, stored by its
// nonzero parts: a1 >= ... >= ak > 0 and 0 > b1 >= ... >= bl. The (m-n)/2
// shift on the U(p) side is display-only.
struct UnitarySigma {
  std::vector<int> a;
  std::vector<int> b;
  int p = 1;
  int m = 1;
  int n = 1;

  std::string label() const;
  friend bool operator==(const UnitarySigma&, const UnitarySigma&) = default;
};

// O(n) parameter (a1 >= ... >= ak > 0, padded with zeros; epsilon = +-1) in the
// (O(n), Sp(2p)) correspondence. The sgn twist is carried as epsilon only.
struct SignedWeight {
  std::vector<int> a;
  int epsilon = 1;
  int n = 1;
  int p = 1;

  std::string label() const;
  friend bool operator==(const SignedWeight&, const SignedWeight&) = default;
};

// Strict mode checks k+l <= p, k <= m, l <= n and nonzero parts. Relaxed mode
// admits zero entries and drops k+l <= p; k <= m and l <= n stay because the
// blocks must fit.
void validate(const UnitarySigma& sigma, bool relaxed = false);
void validate(const SignedWeight& sigma);

// (a+p/2, ..., p/2, ...) (+) (..., -p/2, b-p/2): first block length m, second n.
Weight theta_u_lowest(const UnitarySigma& sigma, bool relaxed = false);

// (a+n/2, ..., n/2+1 [(1-eps)/2 (n-2k) times], n/2, ...), length p.
Weight theta_o_lowest(const SignedWeight& sigma);

// Longest-element conversion for U(m,n) -> U(n,m): swap the two blocks.
Weight to_highest_gl(const Weight& lowest, int m, int n);

// Longest-element conversion for sp(2p): negate and reverse.
Weight to_highest_sp(const Weight& lowest);

// Every admissible sigma with |entries| <= bound, ordered by (k, l, a, b).
std::vector<UnitarySigma> enumerate_sigma_u(int p, int m, int n, int bound);

// Every admissible (a; eps) with entries <= bound, ordered by (eps, k, a).
std::vector<SignedWeight> enumerate_sigma_o(int n, int p, int bound);

// Weakly decreasing sequences of the given length with entries in [lo, hi],
// in lexicographic order.
std::vector<std::vector<int>> decreasing_sequences(std::size_t length, int lo, int hi);

}  // namespace howe
