#include "dunkl/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace dunkl;

TEST_CASE("rational parsing and formatting") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2")) == "-2");
  CHECK(to_string(parse_rational(" 0/5 ")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("shifted factorials") {
  CHECK(pochhammer(Rational(1, 2), 0) == 1);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(2, 2) == 6);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(2, 3) == 0);
  CHECK(pow2(10) == 1024);
}

TEST_CASE("doubles convert exactly") {
  CHECK(from_double(0.25) == Rational(1, 4));
  CHECK(from_double(-3.0) == -3);
  CHECK(to_double(from_double(0.1)) == 0.1);
}
