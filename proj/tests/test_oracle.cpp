#include "dunkl/harmonic.hpp"
#include "dunkl/oracle.hpp"
#include "dunkl/random.hpp"
#include "dunkl/reference.hpp"
#include "dunkl/spherical.hpp"

#include <doctest.h>
#include <omp.h>

#include <cmath>

using namespace dunkl;

namespace {
Poly P(const char* text, std::size_t d = 2) { return parse_poly(text, d); }
bool relatively_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); }
}  // namespace

TEST_CASE("Monte-Carlo estimates") {
  const auto z2 = make_context(GroupFamily::Z2, 2, {Rational(1, 2), Rational(1, 2)});
  const auto one = mc_sphere_integral(z2, P("1"), 5, 10000);
  CHECK(one.mean == 1.0);
  CHECK(one.samples == 10000);
  CHECK(one.seed == 5);
  CHECK_THROWS_AS(mc_sphere_integral(z2, P("1"), 5, 0), std::invalid_argument);

  const auto planar = make_context(GroupFamily::Z2, 2, {Rational(0), Rational(0)});
  const auto est = mc_sphere_integral(planar, P("x1^2"), 1, 1000000);
  CHECK(std::abs(est.mean - 0.5) <= 4 * est.std_error);
  const auto weighted = mc_sphere_integral(z2, P("x1^2"), 2, 1000000);
  CHECK(std::abs(weighted.mean - 0.5) <= 4 * weighted.std_error);
  CHECK(weighted.std_error > 0);
  CHECK(weighted.std_error < 1e-3);
}

TEST_CASE("Monte-Carlo is deterministic and thread-count independent") {
  const auto b2 = make_context(GroupFamily::B, 2, {Rational(1, 2), Rational(3, 2)});
  const Poly p = P("x1^4 - 3*x1*x2 + 1/2*x2^2");
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  const auto a = mc_sphere_integral(b2, p, 99, 50000);
  omp_set_num_threads(1);
  const auto b = mc_sphere_integral(b2, p, 99, 50000);
  omp_set_num_threads(saved);
  const auto c = reference::mc_sphere_integral_serial(b2, p, 99, 50000);
  CHECK(a.mean == b.mean);
  CHECK(a.mean == c.mean);
  CHECK(a.std_error == c.std_error);
  CHECK(mc_sphere_integral(b2, p, 100, 50000).mean != a.mean);
}

TEST_CASE("Dirichlet integrals") {
  const auto z2 = make_context(GroupFamily::Z2, 2, {Rational(1, 2), Rational(1, 2)});
  const std::vector<unsigned> zero = {0, 0}, a10 = {1, 0};
  CHECK(dirichlet_monomial(z2, zero) == 1);
  CHECK(dirichlet_monomial(z2, a10) == Rational(1, 2));
  const auto planar = make_context(GroupFamily::Z2, 2, {Rational(0), Rational(0)});
  CHECK(dirichlet_monomial(planar, a10) == Rational(1, 2));
  const auto a2 = make_context(GroupFamily::A, 3, {Rational(1)});
  const std::vector<unsigned> a3 = {1, 0, 0};
  CHECK_THROWS_AS(dirichlet_monomial(a2, a3), std::invalid_argument);
  CHECK_THROWS_AS(dirichlet_monomial(z2, a3), std::invalid_argument);

  for (const auto& ctx : {z2, make_context(GroupFamily::Z2, 3, {Rational(1), Rational(1, 2), Rational(0)}),
                          make_context(GroupFamily::Z2, 4, {Rational(2, 3), Rational(0), Rational(5), Rational(1, 4)})})
    for (unsigned n = 0; n <= 6; ++n)
      for (const auto& m : monomials_of_degree(ctx.dimension(), n)) {
        const Poly p = Poly::term(m, 1);
        CHECK(sphere_integrate(ctx, p) == dirichlet_integrate(ctx, p));
      }
}

TEST_CASE("weighted Gegenbauer integration") {
  CHECK(gegenbauer_weight_mean(UniPoly::monomial(0), Rational(3)) == 1);
  // lambda = 1/2: uniform weight on [-1,1], mean of t^2 is 1/3
  CHECK(gegenbauer_weight_mean(UniPoly::monomial(2), Rational(1, 2)) == Rational(1, 3));
  CHECK(gegenbauer_weight_mean(UniPoly::monomial(3), Rational(1, 2)) == 0);
  CHECK_THROWS_AS(gegenbauer_weight_mean(UniPoly::monomial(2), Rational(-1)), std::domain_error);
}

TEST_CASE("Bessel-type function") {
  CHECK(bessel_phi(0.0, 0.0) == 1.0);
  CHECK(bessel_phi(2.5, 0.0) == 1.0);
  for (double z : {0.5, 1.0, 3.0, 7.5, 10.0}) {
    CHECK(relatively_close(bessel_phi(0.5, z), std::sin(z) / z, 1e-12));
    CHECK(relatively_close(bessel_phi(-0.5, z), std::cos(z), 1e-12));
  }
  CHECK(relatively_close(bessel_phi(0.5, 1.0), std::sin(1.0), 1e-15));
  CHECK_THROWS_AS(bessel_phi(-1.0, 1.0), std::domain_error);
  for (double alpha : {0.0, 0.5, 1.5, 4.0})
    for (double z : {0.3, 2.0, 6.0})
      for (unsigned k = static_cast<unsigned>(z * z / 4) + 2; k < 20; ++k) {
        double term = 1.0;
        for (unsigned n = 1; n <= k; ++n) term *= z * z / 4 / (n * (alpha + n));
        CHECK(std::abs(bessel_phi(alpha, z) - bessel_phi_partial(alpha, z, k)) <= term * (1 + 1e-9) + 1e-15);
      }
}
