#include "doctest.h"
#include "maslov/rational.hpp"
#include "maslov/errors.hpp"

using maslov::Rational;

TEST_CASE("normal form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-3, -6).den() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), maslov::Error);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 3) + Rational(2, 3) == Rational(1));
  CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 5) == Rational(-1, 5));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(-4).str() == "-4");
}

TEST_CASE("rounding to a quantum") {
  CHECK(Rational::round_to(1.996, Rational(1)) == Rational(2));
  CHECK(Rational::round_to(0.49, Rational(1, 2)) == Rational(1, 2));
  CHECK(Rational::round_to(-0.76, Rational(1, 2)) == Rational(-1));
  CHECK(Rational::round_to(1.33, Rational(1, 6)) == Rational(4, 3));
  CHECK(Rational::round_to(0.0, Rational(1, 4)) == Rational(0));
  CHECK_THROWS_AS(Rational::round_to(1.0, Rational(0)), maslov::Error);
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("x"), maslov::Error);
  CHECK_THROWS_AS(Rational::parse("1/"), maslov::Error);
  CHECK_THROWS_AS(Rational::parse("1/2z"), maslov::Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), maslov::Error);
}
