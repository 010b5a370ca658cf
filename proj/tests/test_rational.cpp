#include <doctest.h>

#include "renyi/error.hpp"
#include "renyi/rational.hpp"

using renyi::Rational;

TEST_CASE("rationals canonicalize on construction") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(2, 6).str() == "1/3");
  CHECK(Rational(-2, -6).str() == "1/3");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), renyi::Error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 6) == Rational(3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), renyi::Error);

  // 0.1 has no finite binary expansion; the point of exact arithmetic.
  Rational tenth(1, 10);
  Rational sum;
  for (int i = 0; i < 10; ++i) sum += tenth;
  CHECK(sum == Rational(1));
}

TEST_CASE("parse accepts p and p/q and rejects junk") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("+4/2") == Rational(2));
  CHECK_FALSE(Rational::parse("").has_value());
  CHECK_FALSE(Rational::parse("1/").has_value());
  CHECK_FALSE(Rational::parse("/2").has_value());
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("1.5").has_value());
  CHECK_FALSE(Rational::parse("1 /2").has_value());
  CHECK_FALSE(Rational::parse("a").has_value());
}

TEST_CASE("decimal rendering is presentation only") {
  CHECK(Rational(1, 2).decimal() == "0.5");
  CHECK(Rational(1, 3).decimal() == "0.333333333333");
  CHECK(Rational(6).decimal() == "6");
  CHECK(Rational(0).decimal() == "0");
  CHECK(Rational(2, 3).decimal() == "0.666666666667");
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(abs(Rational(-2, 3)) == Rational(2, 3));
  CHECK(Rational(5, 7) <= Rational(5, 7));
}
