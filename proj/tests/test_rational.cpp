#include "doctest.h"

#include <bochnerlab/errors.hpp>
#include <bochnerlab/rational.hpp>

using namespace bochnerlab;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("3/4") == Rational(3) / 4);
  CHECK(parse_rational("-6/8") == Rational(-3) / 4);
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("falling factorial values") {
  CHECK(falling(Rational(5), 0) == 1);
  CHECK(falling(Rational(5), 3) == 60);    // 5*4*3
  CHECK(falling(Rational(2), 4) == 0);     // hits zero
  CHECK(falling(Rational(-1), 3) == -6);   // (-1)(-2)(-3)
  CHECK(falling(Rational(1) / 2, 2) == Rational(-1) / 4);
}

TEST_CASE("binomial values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(6, 6) == 1);
  CHECK(binomial(40, 20) == Rational("137846528820"));
}

TEST_CASE("rat_pow") {
  CHECK(rat_pow(Rational(3) / 2, 0) == 1);
  CHECK(rat_pow(Rational(3) / 2, 3) == Rational(27) / 8);
  CHECK(rat_pow(Rational(-2), 5) == -32);
}
