#include "howe/rational.hpp"
#include "howe/weight.hpp"

#include <doctest.h>

using howe::Rational;
using howe::Weight;

TEST_CASE("rational canonical text") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-6, 4).to_string() == "-3/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational::parse("-10/4").to_string() == "-5/2");
  CHECK(Rational::parse(" 7 ").to_string() == "7");
  CHECK(Rational::parse("+3/1").to_string() == "3");
}

TEST_CASE("rational parse rejects non-exact input") {
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse("1e3"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/-2"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("integrality is exact") {
  CHECK(Rational(3).is_positive_integer());
  CHECK_FALSE(Rational(0).is_positive_integer());
  CHECK_FALSE(Rational(-2).is_positive_integer());
  CHECK_FALSE(Rational(3, 2).is_positive_integer());
  CHECK((Rational(1, 2) + Rational(1, 2)).is_positive_integer());
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("weight parse and print") {
  const Weight w = Weight::parse("-3/2,-7/2");
  REQUIRE(w.size() == 2);
  CHECK(w[0] == Rational(-3, 2));
  CHECK(w.to_string() == "-3/2, -7/2");
  CHECK(Weight::parse("1, 2, 3, 4").to_string(2) == "1, 2 | 3, 4");
  CHECK_THROWS(Weight::parse("1,,2"));
  CHECK_THROWS(Weight::parse("1,0.5"));
  CHECK_THROWS(Weight{1, 2} + Weight{1});
}
