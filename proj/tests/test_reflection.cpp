#include "dunkl/operators.hpp"
#include "dunkl/random.hpp"
#include "dunkl/reflection.hpp"
#include "dunkl/spherical.hpp"

#include <doctest.h>

#include <vector>

using namespace dunkl;

namespace {
RationalVector K(std::initializer_list<Rational> v) { return RationalVector(v); }
}  // namespace

TEST_CASE("group descriptors") {
  CHECK(parse_group("z2^3").family == GroupFamily::Z2);
  CHECK(parse_group("z2^3").dimension == 3);
  CHECK(parse_group("a2").dimension == 3);
  CHECK(parse_group("b2").orbit_count() == 2);
  CHECK(parse_group("d4").dimension == 4);
  CHECK(parse_group("a2").name() == "a2");
  CHECK_THROWS_AS(parse_group("e8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("z2^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("bx"), std::invalid_argument);
}

TEST_CASE("lambda values") {
  CHECK(make_context(GroupFamily::Z2, 2, K({0, 0})).lambda() == 0);
  CHECK(make_context(GroupFamily::Z2, 2, K({Rational(1, 2), Rational(1, 2)})).lambda() == 1);
  CHECK(make_context(GroupFamily::A, 3, K({1})).lambda() == Rational(7, 2));
  // B2: 2 short roots, 2 long roots
  CHECK(make_context(GroupFamily::B, 2, K({Rational(1, 2), Rational(3, 2)})).lambda() == 4);
  CHECK(make_context(GroupFamily::D, 3, K({1})).lambda() == Rational(13, 2));
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(make_context(GroupFamily::Z2, 2, K({-1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(make_context(GroupFamily::Z2, 2, K({1})), std::invalid_argument);
  CHECK_THROWS_AS(make_context(GroupFamily::Z2, 1, K({1})), std::invalid_argument);
  CHECK_THROWS_AS(make_context(GroupFamily::B, 2, K({1})), std::invalid_argument);
  CHECK_THROWS_AS(make_custom_context(2, {{1, 0}, {2, 0}}, {0, 0}, K({1})), std::invalid_argument);
}

TEST_CASE("reflection matrices") {
  const auto z2 = make_context(GroupFamily::Z2, 2, K({1, 1}));
  const RationalVector e1 = {1, 0};
  const RationalMatrix flip = {{-1, 0}, {0, 1}};
  CHECK(reflection_matrix(z2, e1) == flip);

  const auto a2 = make_context(GroupFamily::A, 3, K({1}));
  const RationalVector a = {1, -1, 0};
  const RationalMatrix swap = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(reflection_matrix(a2, a) == swap);

  const RationalVector not_root = {1, 1, 1};
  CHECK_THROWS_AS(reflection_matrix(a2, not_root), std::invalid_argument);

  for (const char* g : {"z2^3", "a2", "b3", "d3"}) {
    const auto spec = parse_group(g);
    const auto ctx = make_context(spec, RationalVector(spec.orbit_count(), Rational(1)));
    for (const auto& alpha : ctx.roots().positive_roots()) {
      const auto r = reflection_matrix(ctx, alpha);
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) {
          Rational s = 0;
          for (std::size_t k = 0; k < r.size(); ++k) s += r[i][k] * r[k][j];
          CHECK(s == (i == j ? 1 : 0));
        }
    }
  }
}

TEST_CASE("root sets are closed under their reflections") {
  for (const char* g : {"z2^3", "a3", "b3", "d4"}) {
    const auto spec = parse_group(g);
    const auto ctx = make_context(spec, RationalVector(spec.orbit_count(), Rational(1, 2)));
    const auto& roots = ctx.roots();
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = 0; b < roots.size(); ++b) {
        const auto& alpha = roots.root(a);
        RationalVector img = roots.root(b);
        const Rational c = 2 * dot(alpha, img) / dot(alpha, alpha);
        for (std::size_t i = 0; i < img.size(); ++i) img[i] -= c * alpha[i];
        std::size_t idx = roots.find(img);
        if (idx == roots.size()) {
          for (auto& x : img) x = -x;
          idx = roots.find(img);
        }
        REQUIRE(idx != roots.size());
        CHECK(roots.kappa(idx) == roots.kappa(b));
      }
  }
}

TEST_CASE("weight function") {
  const auto zero = make_context(GroupFamily::A, 3, K({0}));
  const std::vector<double> x = {0.3, -1.2, 2.0};
  CHECK(weight_eval(zero, x) == 1.0);
  const auto z2 = make_context(GroupFamily::Z2, 2, K({Rational(1, 2), Rational(1, 2)}));
  const std::vector<double> ones = {1.0, 1.0};
  CHECK(weight_eval(z2, ones) == doctest::Approx(1.0));
  const std::vector<double> mirror = {0.0, 0.7};
  CHECK(weight_eval(z2, mirror) == 0.0);
  const std::vector<double> p = {4.0, 9.0};
  CHECK(weight_eval(z2, p) == doctest::Approx(6.0));
}

TEST_CASE("rescaling the roots changes nothing observable") {
  const auto b2 = make_context(GroupFamily::B, 2, K({Rational(1, 2), Rational(3, 2)}));
  std::vector<RationalVector> scaled;
  std::vector<std::size_t> orbit;
  for (std::size_t r = 0; r < b2.roots().size(); ++r) {
    RationalVector v = b2.roots().root(r);
    for (auto& x : v) x *= Rational(5, 3);
    scaled.push_back(v);
    orbit.push_back(b2.roots().orbit_of(r));
  }
  const auto other = make_custom_context(2, scaled, orbit, b2.roots().kappa_by_orbit());
  CHECK(other.lambda() == b2.lambda());
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    const Poly p = random_poly(2, 5, rng);
    CHECK(dunkl_axis(b2, 0, p) == dunkl_axis(other, 0, p));
    CHECK(laplacian(b2, p) == laplacian(other, p));
    CHECK(sphere_integrate(b2, p) == sphere_integrate(other, p));
  }
}
