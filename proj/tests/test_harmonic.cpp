#include "dunkl/harmonic.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/random.hpp"
#include "dunkl/spherical.hpp"

#include <doctest.h>

using namespace dunkl;

namespace {

Poly P(const char* text, std::size_t d = 2) { return parse_poly(text, d); }

std::vector<DunklContext> contexts() {
  return {
      make_context(GroupFamily::Z2, 2, {Rational(1, 2), Rational(1, 2)}),
      make_context(GroupFamily::Z2, 3, {Rational(1), Rational(1, 2), Rational(0)}),
      make_context(GroupFamily::A, 3, {Rational(1)}),
      make_context(GroupFamily::B, 2, {Rational(1, 2), Rational(3, 2)}),
      make_context(GroupFamily::B, 4, {Rational(1, 3), Rational(1)}),
      make_context(GroupFamily::Z2, 2, {Rational(0), Rational(0)}),
  };
}

}  // namespace

TEST_CASE("projection") {
  const auto classical = make_context(GroupFamily::Z2, 2, {Rational(0), Rational(0)});
  CHECK(proj(classical, 2, P("x1^2")) == P("1/2*x1^2 - 1/2*x2^2"));
  for (const auto& ctx : contexts()) {
    const std::size_t d = ctx.dimension();
    CHECK(proj(ctx, 0, Poly::constant(d, 5)) == Poly::constant(d, 5));
    CHECK(proj(ctx, 1, Poly::variable(d, 0)) == Poly::variable(d, 0));
    for (const auto& h : h_harmonic_basis(ctx, 3)) CHECK(proj(ctx, 3, h) == h);
  }
  CHECK_THROWS_AS(proj(classical, 2, P("x1^2 + x2")), std::invalid_argument);
  CHECK_THROWS_AS(proj(classical, 3, P("x1^2")), std::invalid_argument);
}

TEST_CASE("canonical decomposition examples") {
  for (const auto& ctx : contexts()) {
    const auto dec = canonical_decompose(ctx, norm_squared_power(ctx.dimension(), 1));
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0].poly.is_zero());
    CHECK(dec.components[1].poly == Poly::constant(ctx.dimension(), 1));
  }
  const auto classical = contexts().back();
  const auto dec = canonical_decompose(classical, P("x1^2"));
  CHECK(dec.components[0].poly == P("1/2*x1^2 - 1/2*x2^2"));
  CHECK(dec.components[1].poly == P("1/2"));

  const auto b2 = contexts()[3];
  const Poly h = h_harmonic_basis(b2, 4).front();
  const auto single = canonical_decompose(b2, h);
  CHECK(single.components[0].poly == h);
  for (std::size_t i = 1; i < single.components.size(); ++i) CHECK(single.components[i].poly.is_zero());
  CHECK_THROWS_AS(canonical_decompose(b2, P("x1 + x2^2")), std::invalid_argument);
}

TEST_CASE("decomposition reconstructs with harmonic, mutually orthogonal pieces") {
  Rng rng(31);
  for (const auto& ctx : contexts())
    for (unsigned n = 0; n <= 7; ++n) {
      const Poly p = random_homogeneous(ctx.dimension(), n, rng, 6);
      const auto dec = canonical_decompose(ctx, p);
      CHECK(dec.reconstruct() == p);
      for (const auto& c : dec.components) {
        CHECK(is_h_harmonic(ctx, c.poly));
        CHECK((c.poly.is_zero() || c.poly.degree() == static_cast<int>(n - 2 * c.index)));
      }
      for (std::size_t i = 0; i < dec.components.size(); ++i)
        for (std::size_t j = i + 1; j < dec.components.size(); ++j) {
          const Poly a = norm_squared_power(ctx.dimension(), dec.components[i].index) * dec.components[i].poly;
          const Poly b = norm_squared_power(ctx.dimension(), dec.components[j].index) * dec.components[j].poly;
          CHECK(is_zero(pairing(ctx, a, b)));
        }
    }
}

TEST_CASE("a flipped projector breaks reconstruction") {
  const auto ctx = contexts()[0];
  auto flipped = [](const DunklContext& c, unsigned n, const Poly& p) { return 2 * p - proj(c, n, p); };
  const auto dec = canonical_decompose_with(ctx, P("x1^4 + x1*x2^3"), flipped);
  CHECK(dec.reconstruct() != P("x1^4 + x1*x2^3"));
}

TEST_CASE("h-harmonic predicate") {
  for (const auto& ctx : contexts()) {
    const std::size_t d = ctx.dimension();
    CHECK(is_h_harmonic(ctx, Poly::constant(d, 3)));
    CHECK(is_h_harmonic(ctx, Poly::variable(d, d - 1)));
    CHECK_FALSE(is_h_harmonic(ctx, norm_squared_power(d, 1)));
  }
}

TEST_CASE("basis sizes") {
  CHECK(harmonic_dimension(3, 2) == 5);
  CHECK(harmonic_dimension(2, 3) == 2);
  CHECK(harmonic_dimension(4, 0) == 1);
  CHECK(harmonic_dimension(4, 1) == 4);
  const auto classical = contexts().back();
  CHECK(h_harmonic_basis(classical, 3).size() == 2);
  CHECK(h_harmonic_basis(classical, 0) == std::vector<Poly>{Poly::constant(2, 1)});
  for (const auto& ctx : contexts())
    for (unsigned n = 0; n <= 6; ++n) {
      const auto basis = h_harmonic_basis(ctx, n);
      CHECK(basis.size() == harmonic_dimension(ctx.dimension(), n));
      for (const auto& b : basis) CHECK(is_h_harmonic(ctx, b));
    }
}

TEST_CASE("orthogonality constant") {
  const auto classical = contexts().back();
  CHECK(orthogonality_rhs(classical, P("1"), P("1")) == 1);
  CHECK(orthogonality_rhs(classical, P("x1"), P("x1")) == Rational(1, 2));
  CHECK(orthogonality_rhs(classical, P("x1"), P("x1^2 - x2^2")) == 0);
  CHECK_THROWS_AS(orthogonality_rhs(classical, P("x1^2"), P("x1^2")), std::invalid_argument);
  for (const auto& ctx : contexts()) {
    std::vector<Poly> all;
    for (unsigned m = 0; m <= 3; ++m)
      for (const auto& b : h_harmonic_basis(ctx, m)) all.push_back(b);
    for (const auto& p : all)
      for (const auto& q : all) CHECK(orthogonality_rhs(ctx, p, q) == sphere_integrate(ctx, p * q));
  }
}

TEST_CASE("sphere canonical form") {
  const auto ctx = contexts()[2];
  const Poly h = h_harmonic_basis(ctx, 2).front();
  const Poly r2 = norm_squared_power(3, 1);
  CHECK(sphere_canonical_form(ctx, r2 * h + r2 * r2) == h + Poly::constant(3, 1));
  CHECK(sphere_canonical_form(ctx, r2 - Poly::constant(3, 1)).is_zero());
}
