#include "dunkl/spherical.hpp"

#include "dunkl/harmonic.hpp"
#include "dunkl/operators.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

namespace dunkl {

Rational PizzettiSeries::evaluate(const Rational& r) const {
  const Rational r2 = r * r;
  Rational rp = 1;
  for (unsigned k = 0; k < m; ++k) rp *= r;
  Rational total = 0;
  for (const auto& c : coefficients) {
    total += c * rp;
    rp *= r2;
  }
  return total;
}

RadialPowerSum RadialPowerSum::parse(std::string_view text) {
  std::map<unsigned, Rational> acc;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(start, end - start);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("radial term must look like j:c");
    std::string j_text;
    for (char c : item.substr(0, colon))
      if (!std::isspace(static_cast<unsigned char>(c))) j_text.push_back(c);
    if (j_text.empty() || j_text.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("radial exponent must be a non-negative integer");
    acc[static_cast<unsigned>(std::stoul(j_text))] += parse_rational(item.substr(colon + 1));
    start = end + 1;
  }
  RadialPowerSum out;
  for (const auto& [j, c] : acc)
    if (!is_zero(c)) out.terms.emplace_back(j, c);
  return out;
}

Poly RadialPowerSum::to_poly(std::size_t dimension) const {
  Poly out(dimension);
  for (const auto& [j, c] : terms) out += c * norm_squared_power(dimension, j);
  return out;
}

void require_h_harmonic(const DunklContext& ctx, const Poly& q, const char* where) {
  if (q.dimension() != ctx.dimension()) throw std::invalid_argument(std::string(where) + ": dimension mismatch");
  if (q.is_zero()) return;
  if (!q.is_homogeneous() || !is_h_harmonic(ctx, q))
    throw std::invalid_argument(std::string(where) + ": q must be a homogeneous h-harmonic polynomial");
}

namespace {

// (q(D) Delta^n p)(0) / (2^(m+2n) n! (lambda+1)_(m+n)) for p of degree m + 2n.
Rational harmonic_moment(const DunklContext& ctx, const Poly& q, unsigned m, const Poly& p, unsigned n) {
  if (p.is_zero()) return 0;
  const Poly lap = laplacian_power(ctx, p, n);
  const Rational value = apply_operator_poly(ctx, q, lap).constant_term();
  if (is_zero(value)) return 0;
  return value / (pow2(m + 2 * n) * Rational(factorial(n)) * pochhammer(ctx.lambda() + 1, m + n));
}

unsigned degree_of(const Poly& q) { return q.is_zero() ? 0 : static_cast<unsigned>(q.degree()); }

}  // namespace

Rational sphere_integrate(const DunklContext& ctx, const Poly& p) {
  if (p.dimension() != ctx.dimension()) throw std::invalid_argument("sphere_integrate: dimension mismatch");
  Rational total = 0;
  for (const auto& [deg, part] : homogeneous_parts(p)) {
    if (deg % 2 != 0) continue;
    const auto n = static_cast<unsigned>(deg / 2);
    total += laplacian_power(ctx, part, n).constant_term() /
             (pow2(2 * n) * Rational(factorial(n)) * pochhammer(ctx.lambda() + 1, n));
  }
  return total;
}

Rational pair_integral(const DunklContext& ctx, const Poly& q, const Poly& p) {
  require_h_harmonic(ctx, q, "pair_integral");
  if (p.dimension() != ctx.dimension()) throw std::invalid_argument("pair_integral: dimension mismatch");
  if (q.is_zero() || p.is_zero()) return 0;
  if (!p.is_homogeneous()) throw std::invalid_argument("pair_integral: p must be homogeneous");
  const int m = q.degree();
  const int l = p.degree();
  if (l < m || (l - m) % 2 != 0) return 0;
  return harmonic_moment(ctx, q, static_cast<unsigned>(m), p, static_cast<unsigned>((l - m) / 2));
}

std::vector<Rational> weighted_mean_polynomial(const DunklContext& ctx, const Poly& q, const Poly& f) {
  if (f.dimension() != ctx.dimension() || q.dimension() != ctx.dimension())
    throw std::invalid_argument("weighted_mean_polynomial: dimension mismatch");
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(f.degree(), 0)) + 1);
  for (const auto& [deg, part] : homogeneous_parts(f)) coeffs[static_cast<std::size_t>(deg)] = sphere_integrate(ctx, q * part);
  while (coeffs.size() > 1 && is_zero(coeffs.back())) coeffs.pop_back();
  return coeffs;
}

PizzettiSeries extended_pizzetti(const DunklContext& ctx, const Poly& q, const Poly& f, unsigned terms_n) {
  require_h_harmonic(ctx, q, "extended_pizzetti");
  if (f.dimension() != ctx.dimension()) throw std::invalid_argument("extended_pizzetti: dimension mismatch");
  PizzettiSeries out;
  out.m = degree_of(q);
  out.coefficients.assign(terms_n + 1, Rational(0));
  if (q.is_zero()) return out;
  for (unsigned n = 0; n <= terms_n; ++n) {
    // only the degree m+2n part of f survives to the constant term
    const Poly part = homogeneous_part(f, static_cast<int>(out.m + 2 * n));
    out.coefficients[n] = harmonic_moment(ctx, q, out.m, part, n);
  }
  return out;
}

PizzettiSeries pizzetti(const DunklContext& ctx, const Poly& f, unsigned terms_n) {
  return extended_pizzetti(ctx, Poly::constant(ctx.dimension(), 1), f, terms_n);
}

Poly hobson_apply(const DunklContext& ctx, const Poly& p, const RadialPowerSum& f0) {
  if (p.dimension() != ctx.dimension()) throw std::invalid_argument("hobson_apply: dimension mismatch");
  const std::size_t d = ctx.dimension();
  if (p.is_zero()) return Poly(d);
  if (!p.is_homogeneous()) throw std::invalid_argument("hobson_apply: p must be homogeneous");
  const auto m = static_cast<unsigned>(p.degree());

  Poly out(d);
  Poly lap = p;
  for (unsigned i = 0; i <= m / 2; ++i) {
    if (i > 0) lap = laplacian(ctx, lap);
    if (lap.is_zero()) break;
    // (rho^-1 d/drho)^k rho^(2j) = 2^k j!/(j-k)! rho^(2j-2k), zero once k > j
    const unsigned k = m - i;
    Poly radial(d);
    for (const auto& [j, c] : f0.terms) {
      if (j < k) continue;
      const Rational factor = c * pow2(k) * Rational(factorial(j)) / Rational(factorial(j - k));
      radial += factor * norm_squared_power(d, j - k);
    }
    if (radial.is_zero()) continue;
    out += (1 / (pow2(i) * Rational(factorial(i)))) * (radial * lap);
  }
  return out;
}

Poly harmonic_radial_power(const DunklContext& ctx, const Poly& q, unsigned j) {
  require_h_harmonic(ctx, q, "harmonic_radial_power");
  const std::size_t d = ctx.dimension();
  if (q.is_zero()) return Poly(d);
  const auto m = static_cast<unsigned>(q.degree());
  if (j < m) return Poly(d);
  const Rational factor = pow2(m) * Rational(factorial(j)) / Rational(factorial(j - m));
  return factor * (norm_squared_power(d, j - m) * q);
}

PizzettiSeries pizzetti_from_hobson(const DunklContext& ctx, const Poly& q, const Poly& f, unsigned terms_n) {
  require_h_harmonic(ctx, q, "pizzetti_from_hobson");
  if (f.dimension() != ctx.dimension()) throw std::invalid_argument("pizzetti_from_hobson: dimension mismatch");
  PizzettiSeries out;
  out.m = degree_of(q);
  out.coefficients.assign(terms_n + 1, Rational(0));
  if (q.is_zero()) return out;
  const unsigned m = out.m;

  // The Pizzetti series of q f has r^(2j) coefficient Delta^j(q f_(2j-m))(0) / (j! (lambda+1)_j 4^j).
  // Since q(ry) = r^m q(y), its r^(2j) term is the r^(m+2n) term of the extended series, n = j - m;
  // for j < m the coefficient vanishes because q(D)|x|^(2j) = 0.
  for (unsigned n = 0; n <= terms_n; ++n) {
    const unsigned j = n + m;
    const Poly part = homogeneous_part(f, static_cast<int>(2 * j - m));
    if (part.is_zero()) continue;
    const Poly kernel = harmonic_radial_power(ctx, q, j);  // q(D)|x|^(2j)
    const Rational value = pairing(ctx, kernel, part);     // = Delta^j (q f_(2j-m))
    out.coefficients[n] = value / (Rational(factorial(j)) * pochhammer(ctx.lambda() + 1, j) * pow2(2 * j));
  }
  return out;
}

double bessel_form_eval(const DunklContext& ctx, const Poly& q, const Poly& f, double r, BesselPrefactor prefactor) {
  require_h_harmonic(ctx, q, "bessel_form_eval");
  if (f.dimension() != ctx.dimension()) throw std::invalid_argument("bessel_form_eval: dimension mismatch");
  if (q.is_zero() || f.is_zero()) return 0.0;
  const unsigned m = degree_of(q);
  const double alpha = ctx.lambda().get_d() + m;
  const double lambda = ctx.lambda().get_d();
  const double half_r = r / 2.0;

  // phi_alpha(i D r) = sum_n Gamma(alpha+1) / (n! Gamma(alpha+n+1)) (r/2)^(2n) Delta^n
  const int top = f.degree();
  double sum = 0.0;
  double weight = 1.0;  // 1 / (n! (alpha+1)_n)
  double radius = 1.0;  // (r/2)^(2n)
  for (unsigned n = 0; static_cast<int>(m + 2 * n) <= top; ++n) {
    if (n > 0) {
      weight /= n * (alpha + n);
      radius *= half_r * half_r;
    }
    const Poly part = homogeneous_part(f, static_cast<int>(m + 2 * n));
    if (part.is_zero()) continue;
    const double moment = apply_operator_poly(ctx, q, laplacian_power(ctx, part, n)).constant_term().get_d();
    sum += weight * radius * moment;
  }

  double shifted = 1.0;
  const double base = prefactor == BesselPrefactor::ShiftedLambdaPlusOne ? lambda + 1.0 : lambda;
  for (unsigned k = 0; k < m; ++k) shifted *= base + k;
  double lead = 1.0;
  for (unsigned k = 0; k < m; ++k) lead *= half_r;
  return lead * sum / shifted;
}

}  // namespace dunkl
