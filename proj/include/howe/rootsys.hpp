#pragma once

#include "howe/rational.hpp"
#include "howe/weight.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace howe {

// gl(n+m) relative to gl(n) x gl(m), or sp(2p) relative to gl(p).
enum class RootKind { GL, SP };

struct Root {
  std::vector<int> coords;
  bool positive = false;
  bool compact = false;

  int norm2() const;
  Weight as_weight() const { return Weight::from_integers(coords); }
  // Human-readable form such as "e1 - e4", "e1 + e2", "2e1", "-2e3".
  std::string label() const;

  friend bool operator==(const Root&, const Root&) = default;
};

struct RootClass {
  bool positive = false;
  bool compact = false;
  friend bool operator==(const RootClass&, const RootClass&) = default;
};

class RootSystem {
public:
  RootKind kind() const { return kind_; }
  std::size_t rank() const { return rank_; }
  // GL(n,m): sizes of the two compact blocks. SP(p): first = p, second = 0.
  int first_block() const { return first_block_; }
  int second_block() const { return second_block_; }
  std::string name() const;

  const std::vector<Root>& roots() const { return roots_; }
  const Weight& rho() const { return rho_; }

  std::vector<Root> compact_roots() const;
  std::vector<Root> noncompact_roots() const;
  std::vector<Root> positive_compact_roots() const;
  std::vector<Root> positive_noncompact_roots() const;
  // Positive roots that are not a sum of two positive roots.
  std::vector<Root> simple_roots() const;

  const Root* find(std::span<const int> coords) const;

private:
  friend RootSystem build_gl_root_system(int n, int m);
  friend RootSystem build_sp_root_system(int p);

  RootSystem(RootKind kind, std::size_t rank, int first, int second, std::vector<Root> roots);

  RootKind kind_;
  std::size_t rank_;
  int first_block_;
  int second_block_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
  Weight rho_;
};

// Roots e_i - e_j of gl(n+m); positive iff i < j; compact iff i, j lie in the
// same block {1..n} or {n+1..n+m}.
RootSystem build_gl_root_system(int n, int m);

// Roots e_i - e_j, +-(e_i + e_j), +-2e_i of sp(2p); compact exactly the e_i - e_j.
RootSystem build_sp_root_system(int p);

// 2<lambda, alpha> / <alpha, alpha> for the standard dot product.
Rational pairing(const Weight& lambda, const Root& alpha);

// s_alpha(v) = v - (v)_alpha * alpha.
Weight reflect(const Root& alpha, const Weight& v);
Weight reflect(const Root& alpha, const Root& gamma);

std::optional<RootClass> classify_root(const RootSystem& rs, std::span<const int> coords);

}  // namespace howe
