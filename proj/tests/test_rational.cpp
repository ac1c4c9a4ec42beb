#include <doctest.h>

#include "abh/rational.hpp"

using abh::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-1, 3).str() == "-1/3");
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK((-Rational(3, 5)).str() == "-3/5");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("+2/6") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("exact square root") {
  CHECK(Rational(4).exact_sqrt() == Rational(2));
  CHECK(Rational(9, 16).exact_sqrt() == Rational(3, 4));
  CHECK(Rational(1, 4).exact_sqrt() == Rational(1, 2));
  CHECK_FALSE(Rational(2).exact_sqrt().has_value());
  CHECK_FALSE(Rational(1, 3).exact_sqrt().has_value());
  CHECK_FALSE(Rational(-4).exact_sqrt().has_value());
}

TEST_CASE("arbitrary precision survives repeated products") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(10);
  Rational small = Rational(1) / big;
  CHECK(big * small == Rational(1));
  CHECK(big.str().size() == 41);
}
