#include "howe/graded.hpp"

#include "howe/rootsys.hpp"

#include <stdexcept>
#include <string>

namespace howe {

BigInt sym_hilbert(int d, int n) {
  if (n < 0) throw std::invalid_argument("sym_hilbert: degree must be >= 0");
  if (d < 0) throw std::invalid_argument("sym_hilbert: generator count must be >= 0");
  if (n == 0) return 1;
  if (d == 0) throw std::invalid_argument("sym_hilbert: d = 0 with positive degree");
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(d + n - 1), static_cast<unsigned long>(n));
  return out;
}

int dim_p_orthogonal(int m, int n) {
  // Free entries of the off-diagonal block A; the lower block is A^T.
  int free = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) ++free;
  return free;
}

int dim_p_plus_symplectic(int p) {
  int free = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) ++free;
  return free;
}

GradedCheck check_graded_dims_o(int m, int n, int dimE, int N) {
  if (m < 1 || n < 1 || dimE < 1 || N < 0)
    throw std::invalid_argument("check_graded_dims_o: need m, n, dimE >= 1 and N >= 0");
  GradedCheck out;
  out.dim_p = dim_p_orthogonal(m, n);
  out.dim_p_plus = static_cast<int>(build_gl_root_system(m, n).positive_noncompact_roots().size());
  BigInt lhs = 0;
  BigInt rhs = 0;
  for (int t = 0; t <= N; ++t) {
    lhs += dimE * sym_hilbert(out.dim_p, t);
    rhs += dimE * sym_hilbert(out.dim_p_plus, t);
    out.rows.push_back({t, lhs, rhs, rhs});
    out.equal = out.equal && lhs == rhs;
  }
  return out;
}

GradedCheck check_graded_dims_sp(int p, int dimE, int dimF, int N) {
  if (p < 1 || dimE < 1 || dimF < 1 || N < 0)
    throw std::invalid_argument("check_graded_dims_sp: need p, dimE, dimF >= 1 and N >= 0");
  GradedCheck out;
  const auto rs = build_sp_root_system(p);
  out.dim_p_plus = static_cast<int>(rs.positive_noncompact_roots().size());
  out.dim_p = static_cast<int>(rs.noncompact_roots().size());
  const int d_minus = dim_p_plus_symplectic(p);
  const BigInt ef = BigInt(dimE) * dimF;
  BigInt v = 0;
  BigInt tensor = 0;
  BigInt cauchy = 0;
  for (int t = 0; t <= N; ++t) {
    // V: PBW monomials p^- then p^+ of total degree t.
    for (int r = 0; r <= t; ++r) v += ef * sym_hilbert(d_minus, r) * sym_hilbert(out.dim_p_plus, t - r);
    // V_E (x) V_F: degree r from the first factor, s = t - r from the second.
    for (int r = 0; r <= t; ++r)
      tensor += (dimE * sym_hilbert(d_minus, r)) * (dimF * sym_hilbert(out.dim_p_plus, t - r));
    cauchy += ef * sym_hilbert(out.dim_p, t);
    out.rows.push_back({t, v, tensor, cauchy});
    out.equal = out.equal && v == tensor && tensor == cauchy;
  }
  return out;
}

namespace {

void require_decreasing(const Weight& lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i - 1] < lambda[i])
      throw std::invalid_argument("weyl_dim: weight (" + lambda.to_string() + ") is not dominant");
}

BigInt to_integer(const Rational& r, const char* what) {
  if (!r.is_integer()) throw std::logic_error(std::string("weyl_dim: non-integral ") + what);
  return r.numerator();
}

}  // namespace

BigInt weyl_dim(GroupKind kind, const Weight& lambda, int n) {
  require_decreasing(lambda);
  Rational num(1);
  Rational den(1);
  if (kind == GroupKind::Unitary) {
    for (std::size_t i = 0; i < lambda.size(); ++i)
      for (std::size_t j = i + 1; j < lambda.size(); ++j) {
        const Rational diff = lambda[i] - lambda[j];
        if (!diff.is_integer())
          throw std::invalid_argument("weyl_dim: entries of (" + lambda.to_string() +
                                      ") do not differ by integers");
        num *= diff + Rational(static_cast<long>(j - i));
        den *= Rational(static_cast<long>(j - i));
      }
    return to_integer(num / den, "U(q) dimension");
  }

  if (n < 1) throw std::invalid_argument("weyl_dim: O(n) needs n >= 1");
  const std::size_t r = static_cast<std::size_t>(n / 2);
  if (lambda.size() > r)
    throw std::invalid_argument("weyl_dim: O(" + std::to_string(n) + ") parameter has more than " +
                                std::to_string(r) + " entries");
  std::vector<Rational> l(r);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (!lambda[i].is_integer() || lambda[i].sign() < 0)
      throw std::invalid_argument("weyl_dim: O(n) parameter entries must be nonnegative integers");
    l[i] = lambda[i];
    if (lambda[i].sign() > 0) ++nonzero;
  }
  // rho for B_r (n odd) or D_r (n even), then the SO(n) Weyl product.
  const Rational shift = n % 2 == 1 ? Rational(1, 2) : Rational(0);
  std::vector<Rational> rho(r);
  for (std::size_t i = 0; i < r; ++i) rho[i] = Rational(static_cast<long>(r - 1 - i)) + shift;
  for (std::size_t i = 0; i < r; ++i) {
    const Rational li = l[i] + rho[i];
    for (std::size_t j = i + 1; j < r; ++j) {
      const Rational lj = l[j] + rho[j];
      num *= li * li - lj * lj;
      den *= rho[i] * rho[i] - rho[j] * rho[j];
    }
    if (n % 2 == 1) {
      num *= li;
      den *= rho[i];
    }
  }
  BigInt dim = to_integer(num / den, "SO(n) dimension");
  // For n even with a_{n/2} > 0 the O(n) irreducible is the sum of the SO(n)
  // irreducibles with highest weights lambda and its last-sign flip.
  if (n % 2 == 0 && r > 0 && nonzero == r) dim *= 2;
  return dim;
}

}  // namespace howe
