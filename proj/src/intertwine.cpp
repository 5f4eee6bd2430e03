#include "dunkl/intertwine.hpp"

#include "dunkl/harmonic.hpp"
#include "dunkl/linalg.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/spherical.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace dunkl {

// ----------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::parse(std::string_view text) {
  std::string rewritten;
  for (char c : text) {
    if (c == 't')
      rewritten += "x1";
    else
      rewritten.push_back(c);
  }
  const Poly p = parse_poly(rewritten, 1);
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  for (const auto& [m, c] : p.terms()) coeffs[m[0]] = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UniPoly::coefficient(unsigned power) const { return power < coeffs_.size() ? coeffs_[power] : Rational(0); }

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& v : out) v *= c;
  return UniPoly(std::move(out));
}

std::string format_unipoly(const UniPoly& p) {
  Poly as_poly(1);
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    Monomial m(1);
    m.set(0, static_cast<unsigned>(k));
    as_poly.add_term(m, p.coefficients()[k]);
  }
  std::string text = format_poly(as_poly);
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "x1") == 0) {
      out.push_back('t');
      ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

UniPoly gegenbauer(unsigned m, const Rational& lambda) {
  if (sgn(lambda) <= 0) throw std::domain_error("Gegenbauer polynomials need lambda > 0");
  const UniPoly t = UniPoly::monomial(1);
  UniPoly prev = UniPoly::monomial(0);
  if (m == 0) return prev;
  UniPoly cur = UniPoly::monomial(1, 2 * lambda);
  // n C_n = 2 (n + lambda - 1) t C_{n-1} - (n + 2 lambda - 2) C_{n-2}
  for (unsigned n = 2; n <= m; ++n) {
    const Rational nn = n;
    UniPoly next = (2 * (nn + lambda - 1) / nn) * (t * cur) + (-(nn + 2 * lambda - 2) / nn) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// ------------------------------------------------------------- Intertwiner

Intertwiner::Intertwiner(const DunklContext& ctx) : ctx_(ctx) {}

const Intertwiner::DegreeTable& Intertwiner::table(unsigned n) const {
  std::lock_guard lock(mutex_);
  extend_locked(n);
  return tables_[n];
}

std::vector<Poly> Intertwiner::degree_images(unsigned n) const { return table(n).images; }

void Intertwiner::extend_locked(unsigned n) const {
  const std::size_t d = ctx_.dimension();
  while (tables_.size() <= n) {
    const auto deg = static_cast<unsigned>(tables_.size());
    DegreeTable next;
    next.basis = monomials_of_degree(d, deg);
    for (std::size_t i = 0; i < next.basis.size(); ++i) next.index.emplace(next.basis[i], i);

    if (deg == 0) {
      next.images.push_back(Poly::constant(d, 1));
      tables_.push_back(std::move(next));
      continue;
    }

    const DegreeTable& lower = tables_.back();
    const std::size_t cols = next.basis.size();
    const std::size_t lower_size = lower.basis.size();

    // System matrix: row (j, r) holds the coefficient of lower.basis[r] in D_j x^beta.
    std::vector<std::vector<Poly>> gradients(cols);
    const auto count = static_cast<long>(cols);
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
      const auto c = static_cast<std::size_t>(k);
      gradients[c] = dunkl_gradient(ctx_, Poly::term(next.basis[c], 1));
    }

    RationalMatrix a(d * lower_size, RationalVector(cols));
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t j = 0; j < d; ++j) {
        const RationalVector coords = coordinates(gradients[c][j], lower.basis);
        for (std::size_t r = 0; r < lower_size; ++r) a[j * lower_size + r][c] = coords[r];
      }

    // Right-hand sides: V(d_j x^g) = g_j V(x^(g - e_j)).
    RationalMatrix b(d * lower_size, RationalVector(cols));
    for (std::size_t k = 0; k < cols; ++k) {
      const Monomial& g = next.basis[k];
      for (std::size_t j = 0; j < d; ++j) {
        if (g[j] == 0) continue;
        Monomial lowered = g;
        lowered.set(j, g[j] - 1);
        const Poly& image = lower.images[lower.index.at(lowered)];
        const RationalVector coords = coordinates(image, lower.basis);
        for (std::size_t r = 0; r < lower_size; ++r) b[j * lower_size + r][k] = coords[r] * g[j];
      }
    }

    const RationalMatrix solution = solve_unique(a, b, cols);
    for (std::size_t k = 0; k < cols; ++k) {
      RationalVector column(cols);
      for (std::size_t c = 0; c < cols; ++c) column[c] = solution[c][k];
      next.images.push_back(from_coordinates(column, next.basis));
    }
    tables_.push_back(std::move(next));
  }
}

Poly Intertwiner::apply(const Poly& p) const {
  if (p.dimension() != ctx_.dimension()) throw std::invalid_argument("intertwiner: dimension mismatch");
  Poly out(p.dimension());
  for (const auto& [deg, part] : homogeneous_parts(p)) {
    const DegreeTable& t = table(static_cast<unsigned>(deg));
    for (const auto& [m, c] : part.terms()) out += c * t.images[t.index.at(m)];
  }
  return out;
}

Poly intertwiner_apply(const DunklContext& ctx, const Poly& p) { return Intertwiner(ctx).apply(p); }

// ------------------------------------------------------------ Funk-Hecke

namespace {

void require_positive_lambda(const DunklContext& ctx) {
  if (sgn(ctx.lambda()) <= 0)
    throw std::domain_error("lambda_kappa must be positive (d = 2 with kappa = 0 is not supported here)");
}

// Monomial rule; finite for every lambda >= 0.
Rational monomial_rule(const DunklContext& ctx, unsigned m, const UniPoly& phi) {
  Rational total = 0;
  const auto& coeffs = phi.coefficients();
  for (std::size_t l = m; l < coeffs.size(); l += 2) {
    if (is_zero(coeffs[l])) continue;
    const auto n = static_cast<unsigned>((l - m) / 2);
    total += coeffs[l] * Rational(factorial(static_cast<unsigned>(l))) /
             (pow2(static_cast<unsigned>(l)) * Rational(factorial(n)) * pochhammer(ctx.lambda() + 1, m + n));
  }
  return total;
}

}  // namespace

Rational funk_hecke_coeff(const DunklContext& ctx, unsigned m, const UniPoly& phi) {
  require_positive_lambda(ctx);
  return monomial_rule(ctx, m, phi);
}

Poly zonal_bipoly(std::size_t d, const UniPoly& phi) {
  Poly inner(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    Monomial m(2 * d);
    m.set(i, 1);
    m.set(d + i, 1);
    inner.add_term(m, 1);
  }
  Poly out(2 * d);
  Poly inner_power = Poly::constant(2 * d, 1);
  const auto& coeffs = phi.coefficients();
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (l > 0) inner_power = inner_power * inner;
    if (!is_zero(coeffs[l])) out += coeffs[l] * inner_power;
  }
  return out;
}

std::map<Monomial, Poly, GradedLexDescending> split_bipoly(const Poly& bipoly) {
  if (bipoly.dimension() % 2 != 0) throw std::invalid_argument("bipoly must have an even number of variables");
  const std::size_t d = bipoly.dimension() / 2;
  std::map<Monomial, Poly, GradedLexDescending> out;
  for (const auto& [m, c] : bipoly.terms()) {
    Monomial mx(d);
    Monomial my(d);
    for (std::size_t i = 0; i < d; ++i) {
      mx.set(i, m[i]);
      my.set(i, m[d + i]);
    }
    out.try_emplace(mx, d).first->second.add_term(my, c);
  }
  return out;
}

namespace {

Poly join_bipoly(std::size_t d, const Monomial& mx, const Poly& y_part) {
  Poly out(2 * d);
  for (const auto& [my, c] : y_part.terms()) {
    Monomial m(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      m.set(i, mx[i]);
      m.set(d + i, my[i]);
    }
    out.add_term(m, c);
  }
  return out;
}

}  // namespace

Poly apply_intertwiner_y(const Intertwiner& v, const Poly& bipoly) {
  const std::size_t d = v.context().dimension();
  if (bipoly.dimension() != 2 * d) throw std::invalid_argument("bipoly dimension must be 2d");
  Poly out(2 * d);
  for (const auto& [mx, y_part] : split_bipoly(bipoly)) out += join_bipoly(d, mx, v.apply(y_part));
  return out;
}

Poly integrate_y(const DunklContext& ctx, const Poly& bipoly, const Poly& q) {
  const std::size_t d = ctx.dimension();
  if (bipoly.dimension() != 2 * d) throw std::invalid_argument("bipoly dimension must be 2d");
  const auto blocks = split_bipoly(bipoly);
  std::vector<const Monomial*> keys;
  std::vector<const Poly*> parts;
  for (const auto& [mx, y_part] : blocks) {
    keys.push_back(&mx);
    parts.push_back(&y_part);
  }
  std::vector<Rational> values(keys.size());
  const auto count = static_cast<long>(keys.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    values[i] = sphere_integrate(ctx, *parts[i] * q);
  }
  Poly out(d);
  for (std::size_t i = 0; i < keys.size(); ++i) out.add_term(*keys[i], values[i]);
  return out;
}

FunkHeckeResult funk_hecke_check(const DunklContext& ctx, const UniPoly& phi, const Poly& q) {
  return funk_hecke_check(Intertwiner(ctx), phi, q);
}

FunkHeckeResult funk_hecke_check(const Intertwiner& v, const UniPoly& phi, const Poly& q) {
  const DunklContext& ctx = v.context();
  require_h_harmonic(ctx, q, "funk_hecke_check");
  const unsigned m = q.is_zero() ? 0 : static_cast<unsigned>(q.degree());

  FunkHeckeResult out;
  out.a = monomial_rule(ctx, m, phi);
  const Poly kernel = apply_intertwiner_y(v, zonal_bipoly(ctx.dimension(), phi));
  out.lhs = sphere_canonical_form(ctx, integrate_y(ctx, kernel, q));
  out.rhs = out.a * q;
  out.holds = out.lhs == out.rhs;
  return out;
}

Poly reproducing_kernel(const DunklContext& ctx, unsigned n) { return reproducing_kernel(Intertwiner(ctx), n); }

Poly reproducing_kernel(const Intertwiner& v, unsigned n) {
  const DunklContext& ctx = v.context();
  require_positive_lambda(ctx);
  const Rational& lambda = ctx.lambda();
  const Rational factor = (static_cast<long>(n) + lambda) / lambda;
  return factor * apply_intertwiner_y(v, zonal_bipoly(ctx.dimension(), gegenbauer(n, lambda)));
}

bool reproducing_check(const DunklContext& ctx, unsigned n, const Poly& q) {
  return reproducing_check(Intertwiner(ctx), n, q);
}

bool reproducing_check(const Intertwiner& v, unsigned n, const Poly& q) {
  const DunklContext& ctx = v.context();
  require_h_harmonic(ctx, q, "reproducing_check");
  const Poly integral = sphere_canonical_form(ctx, integrate_y(ctx, reproducing_kernel(v, n), q));
  const bool same_degree = !q.is_zero() && q.degree() == static_cast<int>(n);
  return same_degree ? integral == q : integral.is_zero();
}

}  // namespace dunkl
