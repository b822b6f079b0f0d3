#include <doctest.h>

#include "zmc/rational.hpp"

using zmc::Rational;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(zmc::parse_rational("7") == 7);
  CHECK(zmc::parse_rational("-8") == -8);
  CHECK(zmc::parse_rational("2/3") == Rational(2, 3));
  CHECK(zmc::parse_rational("-4/6") == Rational(-2, 3));
  CHECK(zmc::parse_rational("0.125") == Rational(1, 8));
  CHECK(zmc::parse_rational("-1.5") == Rational(-3, 2));
  CHECK(zmc::parse_rational(".5") == Rational(1, 2));
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "--1", "1e3", "0x10"})
    CHECK_THROWS_AS(zmc::parse_rational(bad), std::invalid_argument);
}

TEST_CASE("to_string is canonical") {
  CHECK(zmc::to_string(Rational(4, 6)) == "2/3");
  CHECK(zmc::to_string(Rational(-6, 3)) == "-2");
  CHECK(zmc::to_string(Rational(0)) == "0");
}

TEST_CASE("is_integer, exact_sqrt and pow") {
  CHECK(zmc::is_integer(Rational(6, 3)));
  CHECK_FALSE(zmc::is_integer(Rational(1, 2)));
  CHECK(zmc::exact_sqrt(Rational(9, 16)) == Rational(3, 4));
  CHECK_FALSE(zmc::exact_sqrt(Rational(2)).has_value());
  CHECK_FALSE(zmc::exact_sqrt(Rational(-1)).has_value());
  CHECK(zmc::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(zmc::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(zmc::pow(Rational(5), 0) == 1);
}
