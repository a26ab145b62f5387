#include "howe/rootsys.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace howe;

namespace {

Root root(const RootSystem& rs, std::vector<int> c) {
  const Root* r = rs.find(c);
  REQUIRE(r != nullptr);
  return *r;
}

Weight rho_formula_gl(int rank) {
  std::vector<Rational> out;
  for (int i = 1; i <= rank; ++i) out.push_back(Rational(rank - 2 * i + 1, 2));
  return Weight(out);
}

Weight rho_formula_sp(int p) {
  std::vector<Rational> out;
  for (int i = 1; i <= p; ++i) out.push_back(Rational(p + 1 - i));
  return Weight(out);
}

std::vector<RootSystem> small_systems() {
  std::vector<RootSystem> out;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; n + m <= 5; ++m) out.push_back(build_gl_root_system(n, m));
  for (int p = 1; p <= 5; ++p) out.push_back(build_sp_root_system(p));
  return out;
}

}  // namespace

TEST_CASE("GL(n,m) root data") {
  SUBCASE("GL(2,2) rho") {
    CHECK(build_gl_root_system(2, 2).rho() ==
          Weight{Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2)});
  }
  SUBCASE("GL(1,1)") {
    const auto rs = build_gl_root_system(1, 1);
    CHECK(rs.roots().size() == 2);
    CHECK(rs.compact_roots().empty());
    CHECK(rs.rho() == Weight{Rational(1, 2), Rational(-1, 2)});
  }
  SUBCASE("GL(2,1)") {
    const auto rs = build_gl_root_system(2, 1);
    CHECK(rs.roots().size() == 6);
    const auto compact = rs.compact_roots();
    REQUIRE(compact.size() == 2);
    CHECK(compact[0].label() == "e1 - e2");
    CHECK(compact[1].label() == "-e1 + e2");
    CHECK(rs.noncompact_roots().size() == 4);
  }
  SUBCASE("rho matches the closed formula") {
    for (int n = 1; n <= 5; ++n)
      for (int m = 1; m <= 5; ++m) CHECK(build_gl_root_system(n, m).rho() == rho_formula_gl(n + m));
  }
  CHECK_THROWS_AS(build_gl_root_system(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_gl_root_system(2, 0), std::invalid_argument);
}

TEST_CASE("SP(p) root data") {
  CHECK(build_sp_root_system(2).rho() == Weight{2, 1});
  SUBCASE("SP(1)") {
    const auto rs = build_sp_root_system(1);
    REQUIRE(rs.roots().size() == 2);
    CHECK(rs.compact_roots().empty());
    CHECK(rs.rho() == Weight{1});
  }
  SUBCASE("SP(3)") {
    const auto rs = build_sp_root_system(3);
    CHECK(rs.roots().size() == 18);
    CHECK(rs.compact_roots().size() == 6);
    CHECK(rs.noncompact_roots().size() == 12);
    std::set<std::string> labels;
    for (const auto& r : rs.positive_noncompact_roots()) labels.insert(r.label());
    CHECK(labels == std::set<std::string>{"e1 + e2", "e1 + e3", "e2 + e3", "2e1", "2e2", "2e3"});
  }
  for (int p = 1; p <= 6; ++p) CHECK(build_sp_root_system(p).rho() == rho_formula_sp(p));
  CHECK_THROWS_AS(build_sp_root_system(0), std::invalid_argument);
}

TEST_CASE("root counts and shapes") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      const auto rs = build_gl_root_system(n, m);
      CHECK(rs.roots().size() == static_cast<std::size_t>((n + m) * (n + m - 1)));
      CHECK(rs.noncompact_roots().size() == static_cast<std::size_t>(2 * n * m));
      for (const auto& r : rs.roots()) {
        int plus = 0, minus = 0, zero = 0;
        for (int c : r.coords) {
          if (c == 1) ++plus;
          else if (c == -1) ++minus;
          else if (c == 0) ++zero;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
        CHECK(zero == n + m - 2);
      }
    }
  for (int p = 1; p <= 6; ++p) {
    const auto rs = build_sp_root_system(p);
    CHECK(rs.roots().size() == static_cast<std::size_t>(2 * p * p));
    CHECK(rs.noncompact_roots().size() == static_cast<std::size_t>(p * p + p));
    for (const auto& r : rs.roots()) {
      // compact iff the coordinates sum to zero (shape e_i - e_j)
      int sum = 0;
      for (int c : r.coords) sum += c;
      CHECK(r.compact == (sum == 0));
      CHECK((r.norm2() == 2 || r.norm2() == 4));
    }
  }
}

TEST_CASE("classify_root") {
  const auto gl = build_gl_root_system(2, 2);
  CHECK(classify_root(gl, std::vector<int>{1, -1, 0, 0}) == RootClass{true, true});
  CHECK(classify_root(gl, std::vector<int>{1, 0, -1, 0}) == RootClass{true, false});
  CHECK(classify_root(gl, std::vector<int>{0, 0, -1, 1}) == RootClass{false, true});
  CHECK_FALSE(classify_root(gl, std::vector<int>{1, 1, 0, 0}).has_value());
  CHECK_FALSE(classify_root(gl, std::vector<int>{0, 0, 0, 0}).has_value());
  const auto sp = build_sp_root_system(2);
  CHECK(classify_root(sp, std::vector<int>{1, 1}) == RootClass{true, false});
  CHECK(classify_root(sp, std::vector<int>{0, -2}) == RootClass{false, false});
  CHECK_FALSE(classify_root(sp, std::vector<int>{1, 0}).has_value());
  CHECK_THROWS(classify_root(sp, std::vector<int>{1, 1, 0}));
}

TEST_CASE("pairing") {
  const auto gl = build_gl_root_system(2, 2);
  const Weight lambda{Rational(1, 2), Rational(-3, 2), Rational(3, 2), Rational(-1, 2)};
  CHECK(pairing(lambda, root(gl, {1, 0, 0, -1})) == Rational(1));

  const auto sp = build_sp_root_system(3);
  const Weight mu{Rational(5, 3), Rational(-7, 2), Rational(2)};
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<int> c(3, 0);
    c[i] = 2;
    CHECK(pairing(mu, root(sp, c)) == mu[i]);
  }
  const auto sp2 = build_sp_root_system(2);
  CHECK(pairing(Weight{Rational(1, 2), Rational(-5, 2)}, root(sp2, {1, 1})) == Rational(-2));
  CHECK_THROWS_AS(pairing(Weight{1, 2, 3}, root(sp2, {1, 1})), std::invalid_argument);
}

TEST_CASE("reflect") {
  const auto gl = build_gl_root_system(2, 1);
  const Root a12 = root(gl, {1, -1, 0});
  CHECK(reflect(a12, a12) == Weight{-1, 1, 0});
  CHECK(reflect(a12, root(gl, {0, 1, -1})) == Weight{1, 0, -1});
  const auto sp = build_sp_root_system(2);
  CHECK(reflect(root(sp, {2, 0}), root(sp, {1, 1})) == Weight{-1, 1});
}

TEST_CASE("property: positivity, involution, permutation of roots") {
  for (const auto& rs : small_systems()) {
    CAPTURE(rs.name());
    for (const auto& a : rs.roots()) {
      std::vector<int> neg(a.coords);
      for (auto& c : neg) c = -c;
      const Root* na = rs.find(neg);
      REQUIRE(na != nullptr);
      CHECK(a.positive != na->positive);
      CHECK(a.compact == na->compact);

      std::set<std::vector<int>> image;
      for (const auto& g : rs.roots()) {
        const Weight once = reflect(a, g);
        const auto coords = once.integral();
        REQUIRE(coords.has_value());
        REQUIRE(rs.find(*coords) != nullptr);
        image.insert(*coords);
        CHECK(reflect(a, once) == g.as_weight());
      }
      CHECK(image.size() == rs.roots().size());
    }
  }
}

TEST_CASE("property: rho pairs to 1 with every simple root") {
  for (const auto& rs : small_systems()) {
    CAPTURE(rs.name());
    const auto simple = rs.simple_roots();
    CHECK(simple.size() == (rs.kind() == RootKind::GL ? rs.rank() - 1 : rs.rank()));
    for (const auto& a : simple) CHECK(pairing(rs.rho(), a) == Rational(1));
  }
}

TEST_CASE("property: pairing is linear in the weight") {
  std::mt19937 gen(20261019);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  const auto random_weight = [&](std::size_t rank) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < rank; ++i) c.emplace_back(num(gen), den(gen));
    return Weight(c);
  };
  for (const auto& rs : small_systems()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Weight x = random_weight(rs.rank());
      const Weight y = random_weight(rs.rank());
      const Rational s(num(gen), den(gen));
      Weight sx = x;
      for (std::size_t i = 0; i < sx.size(); ++i) sx[i] *= s;
      for (const auto& a : rs.roots())
        CHECK(pairing(sx + y, a) == s * pairing(x, a) + pairing(y, a));
    }
  }
}
