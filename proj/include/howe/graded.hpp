#pragma once

#include "howe/rational.hpp"
#include "howe/weight.hpp"

#include <vector>

namespace howe {

// dim S(C^d)[n] = C(d+n-1, n).
BigInt sym_hilbert(int d, int n);

// One filtration degree t with the dimensions computed by each route.
struct GradedRow {
  int degree = 0;
  BigInt lhs;
  BigInt rhs;
  BigInt alt;  // third route where one exists (Cauchy form for sp), else equal to rhs
  friend bool operator==(const GradedRow&, const GradedRow&) = default;
};

struct GradedCheck {
  bool equal = true;
  int dim_p = 0;        // dimension of the non-compact part feeding each side
  int dim_p_plus = 0;
  std::vector<GradedRow> rows;
  friend bool operator==(const GradedCheck&, const GradedCheck&) = default;
};

// p = {[[0, A], [A^T, 0]]} for A in M_{m,n}.
int dim_p_orthogonal(int m, int n);
// p^+ = {[[0, Y], [0, 0]]} for symmetric Y in M_p.
int dim_p_plus_symplectic(int p);

// dim (V_E)_t = dimE * sum_{r<=t} dim S(p)[r] against the same sum over p^+,
// with dim p^+ read off the non-compact positive roots of gl(m+n).
GradedCheck check_graded_dims_o(int m, int n, int dimE, int N);

// dim V_t = dimE dimF sum_{r+s<=t} dim S(p^-)[r] dim S(p^+)[s] against
// dim (V_E (x) V_F)_t, and against dimE dimF sum_{i<=t} dim S(p')[i].
GradedCheck check_graded_dims_sp(int p, int dimE, int dimF, int N);

enum class GroupKind { Unitary, Orthogonal };

// Weyl dimension of the compact-group irreducible with highest weight lambda.
// Unitary: U(q) with q = |lambda|. Orthogonal: O(n) parameter (a1 >= ... >= ak > 0
// padded with zeros to length [n/2]) with n supplied; epsilon does not change the
// dimension.
BigInt weyl_dim(GroupKind kind, const Weight& lambda, int n = 0);

}  // namespace howe
