#include "dunkl/operators.hpp"
#include "dunkl/reference.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dunkl {

namespace {

void require_dimension(const DunklContext& ctx, const Poly& p) {
  if (p.dimension() != ctx.dimension())
    throw std::invalid_argument("polynomial dimension " + std::to_string(p.dimension()) +
                                " does not match group dimension " + std::to_string(ctx.dimension()));
}

// Divided differences for every root with nonzero multiplicity; zero polys elsewhere.
std::vector<Poly> root_differences(const DunklContext& ctx, const Poly& p) {
  const auto& rs = ctx.roots();
  const auto n = static_cast<long>(rs.size());
  std::vector<Poly> out(rs.size(), Poly(p.dimension()));
  if (p.degree() <= 0) return out;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (!is_zero(rs.kappa(k))) out[k] = divided_difference(p, rs.root(k));
  }
  return out;
}

}  // namespace

Poly dunkl_apply(const DunklContext& ctx, std::span<const Rational> xi, const Poly& p) {
  require_dimension(ctx, p);
  if (xi.size() != ctx.dimension()) throw std::invalid_argument("direction has wrong dimension");
  if (std::all_of(xi.begin(), xi.end(), [](const Rational& v) { return is_zero(v); }))
    throw std::invalid_argument("direction must be nonzero");

  Poly out = directional_derivative(p, xi);
  const auto diffs = root_differences(ctx, p);
  const auto& rs = ctx.roots();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Rational weight = rs.kappa(i) * dot(rs.root(i), xi);
    if (!is_zero(weight)) out += weight * diffs[i];
  }
  return out;
}

Poly dunkl_axis(const DunklContext& ctx, std::size_t axis, const Poly& p) {
  if (axis >= ctx.dimension()) throw std::out_of_range("axis out of range");
  RationalVector e(ctx.dimension());
  e[axis] = 1;
  return dunkl_apply(ctx, e, p);
}

std::vector<Poly> dunkl_gradient(const DunklContext& ctx, const Poly& p) {
  require_dimension(ctx, p);
  const std::size_t d = ctx.dimension();
  const auto diffs = root_differences(ctx, p);
  const auto& rs = ctx.roots();
  std::vector<Poly> grad;
  grad.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    Poly g = partial(p, j);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const Rational weight = rs.kappa(i) * rs.root(i)[j];
      if (!is_zero(weight)) g += weight * diffs[i];
    }
    grad.push_back(std::move(g));
  }
  return grad;
}

Poly laplacian(const DunklContext& ctx, const Poly& p) {
  require_dimension(ctx, p);
  Poly out(p.dimension());
  if (p.degree() < 2) return out;
  const auto grad = dunkl_gradient(ctx, p);
  for (std::size_t j = 0; j < grad.size(); ++j) out += dunkl_axis(ctx, j, grad[j]);
  return out;
}

Poly laplacian_power(const DunklContext& ctx, const Poly& p, unsigned n) {
  Poly out = p;
  for (unsigned i = 0; i < n && !out.is_zero(); ++i) out = laplacian(ctx, out);
  return out;
}

Poly apply_operator_poly(const DunklContext& ctx, const Poly& q, const Poly& p) {
  require_dimension(ctx, p);
  require_dimension(ctx, q);
  const std::size_t d = ctx.dimension();
  const int top = p.degree();

  // D^beta p for the exponents reached so far; D^beta is built from D^(beta - e_k)
  // with k the first axis carrying a nonzero exponent.
  std::map<Monomial, Poly, GradedLexDescending> applied;
  applied.emplace(Monomial(d), p);
  auto apply_monomial = [&](auto&& self, const Monomial& beta) -> const Poly& {
    if (auto it = applied.find(beta); it != applied.end()) return it->second;
    std::size_t k = 0;
    while (beta[k] == 0) ++k;
    Monomial prev = beta;
    prev.set(k, beta[k] - 1);
    const Poly& prev_result = self(self, prev);
    Poly next = prev_result.is_zero() ? prev_result : dunkl_axis(ctx, k, prev_result);
    return applied.emplace(beta, std::move(next)).first->second;
  };

  Poly out(d);
  for (const auto& [beta, c] : q.terms()) {
    if (static_cast<int>(beta.degree()) > top) continue;
    out += c * apply_monomial(apply_monomial, beta);
  }
  return out;
}

Rational pairing(const DunklContext& ctx, const Poly& p, const Poly& q) {
  require_dimension(ctx, p);
  require_dimension(ctx, q);
  // Only terms of p whose degree matches a homogeneous part of q reach the constant term.
  Rational total = 0;
  for (const auto& [deg, part] : homogeneous_parts(p)) {
    const Poly q_part = homogeneous_part(q, deg);
    if (q_part.is_zero()) continue;
    total += apply_operator_poly(ctx, part, q_part).constant_term();
  }
  return total;
}

}  // namespace dunkl

namespace dunkl::reference {

Poly dunkl_apply_serial(const DunklContext& ctx, std::span<const Rational> xi, const Poly& p) {
  if (p.dimension() != ctx.dimension() || xi.size() != ctx.dimension())
    throw std::invalid_argument("dimension mismatch");
  Poly out = directional_derivative(p, xi);
  const auto& rs = ctx.roots();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Rational weight = rs.kappa(i) * dot(rs.root(i), xi);
    if (!is_zero(weight)) out += weight * divided_difference(p, rs.root(i));
  }
  return out;
}

Poly laplacian_serial(const DunklContext& ctx, const Poly& p) {
  const std::size_t d = ctx.dimension();
  Poly out(d);
  for (std::size_t j = 0; j < d; ++j) {
    RationalVector e(d);
    e[j] = 1;
    out += dunkl_apply_serial(ctx, e, dunkl_apply_serial(ctx, e, p));
  }
  return out;
}

}  // namespace dunkl::reference
