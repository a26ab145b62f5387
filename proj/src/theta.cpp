#include "howe/theta.hpp"

#include <algorithm>
#include <functional>

namespace howe {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

int middle_length(const SignedWeight& s) {
  const int k = static_cast<int>(s.a.size());
  return s.epsilon == -1 ? s.n - 2 * k : 0;
}

void require_positive(int value, const char* name) {
  if (value < 1) throw ConstraintError(std::string(name) + " must be >= 1");
}

}  // namespace

std::string UnitarySigma::label() const { return "a=(" + join(a) + ") b=(" + join(b) + ")"; }

std::string SignedWeight::label() const {
  return "a=(" + join(a) + ") eps=" + (epsilon == 1 ? "+1" : "-1");
}

void validate(const UnitarySigma& s, bool relaxed) {
  require_positive(s.p, "p");
  require_positive(s.m, "m");
  require_positive(s.n, "n");
  const int k = static_cast<int>(s.a.size());
  const int l = static_cast<int>(s.b.size());
  if (!weakly_decreasing(s.a)) throw ConstraintError("a must be weakly decreasing");
  if (!weakly_decreasing(s.b)) throw ConstraintError("b must be weakly decreasing");
  if (relaxed) {
    if (!s.a.empty() && s.a.back() < 0) throw ConstraintError("a entries must be >= 0");
    if (!s.b.empty() && s.b.front() > 0) throw ConstraintError("b entries must be <= 0");
  } else {
    if (!s.a.empty() && s.a.back() <= 0) throw ConstraintError("a entries must be > 0");
    if (!s.b.empty() && s.b.front() >= 0) throw ConstraintError("b entries must be < 0");
  }
  if (k > s.m) throw ConstraintError("k <= m violated (k=" + std::to_string(k) +
                                     ", m=" + std::to_string(s.m) + ")");
  if (l > s.n) throw ConstraintError("l <= n violated (l=" + std::to_string(l) +
                                     ", n=" + std::to_string(s.n) + ")");
  if (!relaxed && k + l > s.p)
    throw ConstraintError("k+l <= p violated (k+l=" + std::to_string(k + l) +
                          ", p=" + std::to_string(s.p) + ")");
}

void validate(const SignedWeight& s) {
  require_positive(s.n, "n");
  require_positive(s.p, "p");
  if (s.epsilon != 1 && s.epsilon != -1) throw ConstraintError("epsilon must be +1 or -1");
  if (!weakly_decreasing(s.a)) throw ConstraintError("a must be weakly decreasing");
  if (!s.a.empty() && s.a.back() <= 0) throw ConstraintError("a entries must be > 0");
  const int k = static_cast<int>(s.a.size());
  if (k > s.n / 2)
    throw ConstraintError("k <= [n/2] violated (k=" + std::to_string(k) +
                          ", [n/2]=" + std::to_string(s.n / 2) + ")");
  if (k + middle_length(s) > s.p)
    throw ConstraintError("k+(1-eps)/2(n-2k) <= p violated (lhs=" +
                          std::to_string(k + middle_length(s)) + ", p=" + std::to_string(s.p) + ")");
}

Weight theta_u_lowest(const UnitarySigma& s, bool relaxed) {
  validate(s, relaxed);
  const Rational half_p(s.p, 2);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(s.m + s.n));
  for (int ai : s.a) out.push_back(Rational(ai) + half_p);
  for (int i = static_cast<int>(s.a.size()); i < s.m; ++i) out.push_back(half_p);
  for (int i = static_cast<int>(s.b.size()); i < s.n; ++i) out.push_back(-half_p);
  for (int bj : s.b) out.push_back(Rational(bj) - half_p);
  return Weight(std::move(out));
}

Weight theta_o_lowest(const SignedWeight& s) {
  validate(s);
  const Rational half_n(s.n, 2);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(s.p));
  for (int ai : s.a) out.push_back(Rational(ai) + half_n);
  for (int i = 0; i < middle_length(s); ++i) out.push_back(half_n + Rational(1));
  while (out.size() < static_cast<std::size_t>(s.p)) out.push_back(half_n);
  return Weight(std::move(out));
}

Weight to_highest_gl(const Weight& lowest, int m, int n) {
  if (m < 1 || n < 1 || lowest.size() != static_cast<std::size_t>(m + n))
    throw std::invalid_argument("to_highest_gl: weight of length " + std::to_string(lowest.size()) +
                                " does not split as m=" + std::to_string(m) +
                                " + n=" + std::to_string(n));
  std::vector<Rational> out(lowest.begin() + m, lowest.end());
  out.insert(out.end(), lowest.begin(), lowest.begin() + m);
  return Weight(std::move(out));
}

Weight to_highest_sp(const Weight& lowest) {
  if (lowest.empty()) throw std::invalid_argument("to_highest_sp: empty weight");
  std::vector<Rational> out(lowest.coords().rbegin(), lowest.coords().rend());
  for (auto& c : out) c = -c;
  return Weight(std::move(out));
}

std::vector<std::vector<int>> decreasing_sequences(std::size_t length, int lo, int hi) {
  std::vector<std::vector<int>> out;
  if (length > 0 && lo > hi) return out;
  std::vector<int> cur;
  cur.reserve(length);
  // Lexicographic order: smaller leading entries first.
  std::function<void(int)> rec = [&](int cap) {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= cap; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(hi);
  return out;
}

std::vector<UnitarySigma> enumerate_sigma_u(int p, int m, int n, int bound) {
  if (p < 1 || m < 1 || n < 1) throw std::invalid_argument("enumerate_sigma_u: p, m, n must be >= 1");
  if (bound < 0) throw std::invalid_argument("enumerate_sigma_u: bound must be >= 0");
  std::vector<UnitarySigma> out;
  const int kmax = bound == 0 ? 0 : std::min(m, p);
  for (int k = 0; k <= kmax; ++k) {
    const int lmax = bound == 0 ? 0 : std::min(n, p - k);
    for (int l = 0; l <= lmax; ++l) {
      const auto as = decreasing_sequences(static_cast<std::size_t>(k), 1, bound);
      const auto bs = decreasing_sequences(static_cast<std::size_t>(l), -bound, -1);
      for (const auto& a : as)
        for (const auto& b : bs) out.push_back({a, b, p, m, n});
    }
  }
  return out;
}

std::vector<SignedWeight> enumerate_sigma_o(int n, int p, int bound) {
  if (n < 1 || p < 1) throw std::invalid_argument("enumerate_sigma_o: n, p must be >= 1");
  if (bound < 0) throw std::invalid_argument("enumerate_sigma_o: bound must be >= 0");
  std::vector<SignedWeight> out;
  for (int eps : {-1, 1}) {
    const int kmax = bound == 0 ? 0 : n / 2;
    for (int k = 0; k <= kmax; ++k) {
      const int middle = eps == -1 ? n - 2 * k : 0;
      if (k + middle > p) continue;
      for (const auto& a : decreasing_sequences(static_cast<std::size_t>(k), 1, bound))
        out.push_back({a, eps, n, p});
    }
  }
  return out;
}

}  // namespace howe
