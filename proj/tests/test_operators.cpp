#include "dunkl/operators.hpp"
#include "dunkl/random.hpp"
#include "dunkl/reference.hpp"

#include <doctest.h>
#include <omp.h>

using namespace dunkl;

namespace {

Poly P(const char* text, std::size_t d = 2) { return parse_poly(text, d); }

DunklContext z2(Rational k1, Rational k2) { return make_context(GroupFamily::Z2, 2, {k1, k2}); }

// Delta f + sum kappa (2 <grad f, a> <a, x> - |a|^2 (f - f(r x))) / <a, x>^2
Poly laplacian_closed_form(const DunklContext& ctx, const Poly& f) {
  const std::size_t d = ctx.dimension();
  Poly out(d);
  for (std::size_t j = 0; j < d; ++j) out += partial(partial(f, j), j);
  const auto& roots = ctx.roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (is_zero(roots.kappa(r))) continue;
    const auto& a = roots.root(r);
    const Poly form = linear_form(a);
    const Poly numerator = Rational(2) * directional_derivative(f, a) * form -
                           dot(a, a) * (f - substitute_linear(f, reflection_matrix_for(a)));
    out += roots.kappa(r) * divide_by_linear_form(divide_by_linear_form(numerator, a), a);
  }
  return out;
}

std::vector<DunklContext> catalog() {
  return {
      make_context(GroupFamily::Z2, 2, {Rational(1, 2), Rational(1, 2)}),
      make_context(GroupFamily::Z2, 3, {Rational(1), Rational(1, 2), Rational(0)}),
      make_context(GroupFamily::A, 3, {Rational(1)}),
      make_context(GroupFamily::B, 2, {Rational(1, 2), Rational(3, 2)}),
      make_context(GroupFamily::D, 3, {Rational(2, 3)}),
  };
}

}  // namespace

TEST_CASE("Dunkl operator on small inputs") {
  const Rational k1(1, 3), k2(5, 2);
  const auto ctx = z2(k1, k2);
  const RationalVector e1 = {1, 0};
  CHECK(dunkl_apply(ctx, e1, P("x1")) == Poly::constant(2, 1 + 2 * k1));
  CHECK(dunkl_apply(ctx, e1, P("x2")).is_zero());
  CHECK(dunkl_apply(z2(0, 0), e1, P("x1^3")) == P("3*x1^2"));
  const RationalVector zero = {0, 0};
  CHECK_THROWS_AS(dunkl_apply(ctx, zero, P("x1")), std::invalid_argument);
  const RationalVector three = {1, 0, 0};
  CHECK_THROWS_AS(dunkl_apply(ctx, three, P("x1")), std::invalid_argument);
  CHECK_THROWS_AS(dunkl_apply(ctx, e1, P("x1", 3)), std::invalid_argument);
  // on Z2 the operator acts on x1^n by n + 2 kappa_1 [n odd]
  CHECK(dunkl_axis(ctx, 0, P("x1^3*x2")) == (3 + 2 * k1) * P("x1^2*x2"));
  CHECK(dunkl_axis(ctx, 0, P("x1^2*x2")) == P("2*x1*x2"));
}

TEST_CASE("Laplacian examples") {
  for (const auto& ctx : catalog()) {
    const std::size_t d = ctx.dimension();
    CHECK(laplacian(ctx, Poly::constant(d, 1)).is_zero());
    CHECK(laplacian(ctx, norm_squared_power(d, 1)) == Poly::constant(d, 4 * (ctx.lambda() + 1)));
  }
  CHECK(laplacian(z2(0, 0), P("x1^2 - x2^2")).is_zero());
  CHECK(laplacian_power(catalog()[0], P("x1^2"), 0) == P("x1^2"));
}

TEST_CASE("Laplacian agrees with the closed form") {
  Rng rng(101);
  for (const auto& ctx : catalog())
    for (int t = 0; t < 8; ++t) {
      const Poly p = random_poly(ctx.dimension(), 6, rng);
      CHECK(laplacian(ctx, p) == laplacian_closed_form(ctx, p));
    }
}

TEST_CASE("operators commute") {
  Rng rng(7);
  for (const auto& ctx : catalog())
    for (int t = 0; t < 6; ++t) {
      RationalVector xi(ctx.dimension()), eta(ctx.dimension());
      for (auto& x : xi) x = random_rational(rng);
      for (auto& x : eta) x = random_rational(rng);
      const Poly p = random_poly(ctx.dimension(), 6, rng);
      CHECK(dunkl_apply(ctx, xi, dunkl_apply(ctx, eta, p)) == dunkl_apply(ctx, eta, dunkl_apply(ctx, xi, p)));
    }
}

TEST_CASE("polynomials in the operators") {
  const Rational k1(1, 2);
  const auto ctx = z2(k1, 2);
  CHECK(apply_operator_poly(ctx, P("1"), P("x1*x2 + 3")) == P("x1*x2 + 3"));
  CHECK(apply_operator_poly(ctx, P("x1"), P("x1*x2")) == (1 + 2 * k1) * P("x2"));
  Rng rng(9);
  for (const auto& c : catalog()) {
    const Poly p = random_poly(c.dimension(), 6, rng);
    CHECK(apply_operator_poly(c, norm_squared_power(c.dimension(), 1), p) == laplacian(c, p));
    const Poly q = random_poly(c.dimension(), 2, rng);
    const Poly r = random_poly(c.dimension(), 2, rng);
    // a homomorphism: (qr)(D) = q(D) r(D)
    CHECK(apply_operator_poly(c, q * r, p) == apply_operator_poly(c, q, apply_operator_poly(c, r, p)));
  }
}

TEST_CASE("pairing") {
  const Rational k1(2, 7);
  const auto ctx = z2(k1, 1);
  CHECK(pairing(ctx, P("1"), P("1")) == 1);
  CHECK(pairing(ctx, P("x1"), P("x2")) == 0);
  CHECK(pairing(ctx, P("x1"), P("x1")) == 1 + 2 * k1);
  Rng rng(13);
  for (const auto& c : catalog())
    for (unsigned n = 0; n <= 4; ++n) {
      const Poly p = random_homogeneous(c.dimension(), n, rng, 5);
      const Poly q = random_homogeneous(c.dimension(), n, rng, 5);
      const Poly other = random_homogeneous(c.dimension(), n + 1, rng, 5);
      CHECK(pairing(c, p, q) == pairing(c, q, p));
      CHECK(pairing(c, p, p) > 0);
      CHECK(is_zero(pairing(c, p, other)));
    }
}

TEST_CASE("kappa zero gives classical derivatives") {
  Rng rng(19);
  const auto ctx = make_context(GroupFamily::B, 3, {Rational(0), Rational(0)});
  for (int t = 0; t < 10; ++t) {
    const Poly p = random_poly(3, 6, rng);
    for (std::size_t j = 0; j < 3; ++j) CHECK(dunkl_axis(ctx, j, p) == partial(p, j));
  }
}

TEST_CASE("parallel kernels reproduce the serial reference") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  Rng rng(23);
  for (const auto& ctx : catalog())
    for (int t = 0; t < 4; ++t) {
      const Poly p = random_poly(ctx.dimension(), 6, rng);
      RationalVector xi(ctx.dimension());
      for (auto& x : xi) x = random_rational(rng);
      CHECK(dunkl_apply(ctx, xi, p) == reference::dunkl_apply_serial(ctx, xi, p));
      CHECK(laplacian(ctx, p) == reference::laplacian_serial(ctx, p));
    }
  omp_set_num_threads(saved);
}
