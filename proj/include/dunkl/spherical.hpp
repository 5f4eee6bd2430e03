#pragma once

// Exact normalized integration against h_kappa^2 d(sigma) on the unit sphere,
// the (extended) Pizzetti series of polynomial inputs, and Hobson's radial
// calculus for Dunkl operators.
//
// Every integral here is normalized by omega_{kappa,d}, the total mass of
// h_kappa^2 d(sigma); omega itself is never formed.

#include "dunkl/poly.hpp"
#include "dunkl/reflection.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace dunkl {

/// sum_n c_n r^(m + 2n).
struct PizzettiSeries {
  unsigned m = 0;
  std::vector<Rational> coefficients;

  Rational evaluate(const Rational& r) const;
  friend bool operator==(const PizzettiSeries&, const PizzettiSeries&) = default;
};

/// f0(rho) = sum c_j rho^(2j) with distinct j.
struct RadialPowerSum {
  std::vector<std::pair<unsigned, Rational>> terms;

  /// Parses "j:c,j:c,..." (c rational). Repeated j are summed.
  static RadialPowerSum parse(std::string_view text);
  /// f0(|x|) as a polynomial in `dimension` variables.
  Poly to_poly(std::size_t dimension) const;
};

/// (1/omega) integral of p h^2 over the sphere. Each even part p_2n contributes
/// Delta^n p_2n / (2^(2n) n! (lambda+1)_n); odd parts contribute 0.
Rational sphere_integrate(const DunklContext& ctx, const Poly& p);

/// (1/omega) integral of q p h^2 for q in H_{kappa,m} and homogeneous p of degree l:
/// q(D) Delta^n p / (2^(m+2n) n! (lambda+1)_(m+n)) when l - m = 2n >= 0, else 0.
Rational pair_integral(const DunklContext& ctx, const Poly& q, const Poly& p);

/// Coefficients (by power of r) of r -> (1/omega) integral q(y) f(ry) h^2(y),
/// computed by integrating each product q f_l with the q = 1 rule. Entry k is
/// the coefficient of r^k.
std::vector<Rational> weighted_mean_polynomial(const DunklContext& ctx, const Poly& q, const Poly& f);

/// c_n = (q(D) Delta^n f)(0) / (n! (lambda+1)_(m+n) 2^(m+2n)), n = 0..N.
PizzettiSeries extended_pizzetti(const DunklContext& ctx, const Poly& q, const Poly& f, unsigned terms_n);

/// extended_pizzetti with q = 1.
PizzettiSeries pizzetti(const DunklContext& ctx, const Poly& f, unsigned terms_n);

/// p(D) f0(|x|) = sum_i [(rho^-1 d/drho)^(m-i) f0](|x|) Delta^i p / (2^i i!) for homogeneous p of degree m.
Poly hobson_apply(const DunklContext& ctx, const Poly& p, const RadialPowerSum& f0);

/// q(D) |x|^(2j) = 2^m j!/(j-m)! |x|^(2j-2m) q for j >= m, 0 for j < m.
Poly harmonic_radial_power(const DunklContext& ctx, const Poly& q, unsigned j);

/// The extended series rebuilt from the plain Pizzetti series of q f: the
/// coefficient Delta^j (q f_(2j-m))(0) is rewritten as <q(D)|x|^(2j), f_(2j-m)>
/// with q(D)|x|^(2j) taken from harmonic_radial_power.
PizzettiSeries pizzetti_from_hobson(const DunklContext& ctx, const Poly& q, const Poly& f, unsigned terms_n);

enum class BesselPrefactor {
  ShiftedLambdaPlusOne,  // 1 / (lambda+1)_m
  ShiftedLambda,         // 1 / (lambda)_m
};

/// Floating evaluation of prefactor (r/2)^m (q(D) phi_{lambda+m}(i D r) f)(0), with
/// |i D|^2 read as -Delta_kappa. The series is finite for polynomial f.
double bessel_form_eval(const DunklContext& ctx, const Poly& q, const Poly& f, double r,
                        BesselPrefactor prefactor = BesselPrefactor::ShiftedLambdaPlusOne);

/// Throws std::invalid_argument unless q is a homogeneous h-harmonic polynomial.
void require_h_harmonic(const DunklContext& ctx, const Poly& q, const char* where);

}  // namespace dunkl
