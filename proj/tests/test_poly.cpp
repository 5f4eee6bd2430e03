#include "dunkl/poly.hpp"
#include "dunkl/random.hpp"

#include <doctest.h>

using namespace dunkl;

namespace {
Poly P(const char* text, std::size_t d = 2) { return parse_poly(text, d); }
}  // namespace

TEST_CASE("ring operations") {
  CHECK((P("x1") + P("-x1")).is_zero());
  CHECK(P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2"));
  CHECK(scale(Rational(1, 2), P("2*x1*x2")) == P("x1*x2"));
  CHECK(power(P("x1 + 1"), 3) == P("x1^3 + 3*x1^2 + 3*x1 + 1"));
  CHECK(power(P("x1"), 0) == Poly::constant(2, 1));
  CHECK_THROWS_AS(P("x1") + P("x1", 3), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
  Rng rng(11);
  for (int t = 0; t < 25; ++t) {
    const Poly a = random_poly(3, 3, rng), b = random_poly(3, 3, rng), c = random_poly(3, 3, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("partial derivatives") {
  CHECK(partial(P("x1^2*x2"), 0) == P("2*x1*x2"));
  CHECK(partial(P("x1^2"), 1).is_zero());
  CHECK(partial(P("x1^3"), 0) == P("3*x1^2"));
  CHECK_THROWS_AS(partial(P("x1"), 2), std::out_of_range);
  const RationalVector xi = {Rational(1), Rational(2)};
  CHECK(directional_derivative(P("x1*x2"), xi) == P("x2 + 2*x1"));
}

TEST_CASE("evaluation") {
  const RationalVector at = {Rational(1, 2), Rational(1, 4)};
  CHECK(eval_rational(P("x1^2 + x2"), at) == Rational(1, 2));
  CHECK(eval_rational(P("1"), at) == 1);
  const std::vector<double> xf = {0.25, 0.0};
  CHECK(eval_float(P("x1"), xf) == 0.25);
  const RationalVector short_point = {Rational(1)};
  CHECK_THROWS_AS(eval_rational(P("x1"), short_point), std::invalid_argument);
}

TEST_CASE("linear substitution") {
  const RationalMatrix id = {{1, 0}, {0, 1}};
  const RationalMatrix flip = {{-1, 0}, {0, 1}};
  const RationalMatrix swap = {{0, 1}, {1, 0}};
  const RationalMatrix general = {{1, 1}, {0, 2}};
  CHECK(substitute_linear(P("x1"), id) == P("x1"));
  CHECK(substitute_linear(P("x1^2"), flip) == P("x1^2"));
  CHECK(substitute_linear(P("x1*x2"), swap) == P("x1*x2"));
  CHECK(substitute_linear(P("x1^3"), flip) == P("-x1^3"));
  CHECK(substitute_linear(P("x1*x2"), general) == P("2*x1*x2 + 2*x2^2"));
  const RationalMatrix bad = {{1, 0}};
  CHECK_THROWS_AS(substitute_linear(P("x1"), bad), std::invalid_argument);
}

TEST_CASE("divided differences") {
  const RationalVector e1 = {Rational(1), Rational(0)};
  CHECK(divided_difference(P("x1^2*x2"), e1).is_zero());
  CHECK(divided_difference(P("x1^3"), e1) == P("2*x1^2"));
  CHECK(divided_difference(P("x2"), e1).is_zero());
  const RationalVector a = {Rational(1), Rational(-1)};
  CHECK(divided_difference(P("x1^2 - x2^2"), a) == P("2*x1 + 2*x2"));
  CHECK(divided_difference(P("x1*x2"), a).is_zero());
  CHECK(divided_difference(P("x1"), a) == P("1"));
  CHECK_THROWS_AS(divide_by_linear_form(P("x1 + 1"), e1), std::logic_error);
  CHECK(divide_by_linear_form(P("x1^2 - x1*x2"), a) == P("x1"));
}

TEST_CASE("divided differences are exact for random input") {
  Rng rng(3);
  const RationalVector alpha = {Rational(1), Rational(2), Rational(-1, 3)};
  for (int t = 0; t < 20; ++t) {
    const Poly p = random_poly(3, 5, rng);
    const Poly q = divided_difference(p, alpha);
    CHECK(q * linear_form(alpha) == p - substitute_linear(p, reflection_matrix_for(alpha)));
  }
}

TEST_CASE("homogeneous parts") {
  const auto parts = homogeneous_parts(P("x1^2 + x2"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 1);
  CHECK(parts[0].second == P("x2"));
  CHECK(parts[1].first == 2);
  CHECK(parts[1].second == P("x1^2"));
  CHECK(homogeneous_parts(Poly(2)).empty());
  const auto c = homogeneous_parts(P("3"));
  REQUIRE(c.size() == 1);
  CHECK(c[0].first == 0);
  CHECK(c[0].second == P("3"));
  CHECK(homogeneous_part(P("x1^2 + x2"), 5).is_zero());
}

TEST_CASE("degree queries") {
  CHECK(Poly(2).degree() == -1);
  CHECK(P("x1^2 + x2").degree() == 2);
  CHECK(P("x1^2 + x2").low_degree() == 1);
  CHECK(P("x1*x2 - x2^2").is_homogeneous());
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(2, 2).front() == Monomial{2, 0});
  CHECK(norm_squared_power(2, 2) == P("x1^4 + 2*x1^2*x2^2 + x2^4"));
}

TEST_CASE("parsing and formatting") {
  const Poly p = parse_poly("3/2*x1^2*x2 - x3", 3);
  CHECK(p.size() == 2);
  CHECK(p.coefficient(Monomial{2, 1, 0}) == Rational(3, 2));
  CHECK(p.coefficient(Monomial{0, 0, 1}) == -1);
  CHECK(parse_poly("0", 2).is_zero());
  CHECK(format_poly(P("x2+x1")) == "x1 + x2");
  CHECK(format_poly(Poly(2)) == "0");
  CHECK(format_poly(p) == "3/2*x1^2*x2 - x3");
  CHECK(P(" x1 ^ 2 +  3 / 4 ") == P("x1^2+3/4"));
  CHECK(P("x1*x1*x2^1") == P("x1^2*x2"));
  CHECK(P("-x1 + x1").is_zero());
}

TEST_CASE("parse errors carry a position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_poly(text, 2);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(position_of("x1 +") == 4);
  CHECK(position_of("x3") == 0);
  CHECK(position_of("x1 ^ 0") == 5);
  CHECK(position_of("1/0") == 2);
  CHECK(position_of("x1 $ x2") == 3);
  CHECK(position_of("") == 0);
}

TEST_CASE("format then parse is the identity") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Poly p = random_poly(4, 6, rng);
    CHECK(parse_poly(format_poly(p), 4) == p);
  }
}
