#pragma once

// Dunkl operators on polynomials.
//
//   D_xi f = d_xi f + sum_{alpha in R+} kappa_alpha <alpha, xi> (f(x) - f(r_alpha x)) / <alpha, x>
//
// All routines are exact. The per-root divided differences are independent and
// are evaluated in an OpenMP loop; results are combined in root order, so output
// never depends on the thread count.

#include "dunkl/poly.hpp"
#include "dunkl/reflection.hpp"

#include <span>
#include <vector>

namespace dunkl {

/// D_xi p. Throws std::invalid_argument for xi = 0 or mismatched dimensions.
Poly dunkl_apply(const DunklContext& ctx, std::span<const Rational> xi, const Poly& p);

/// D_{e_axis} p.
Poly dunkl_axis(const DunklContext& ctx, std::size_t axis, const Poly& p);

/// (D_1 p, ..., D_d p), sharing one divided difference per root.
std::vector<Poly> dunkl_gradient(const DunklContext& ctx, const Poly& p);

/// Dunkl Laplacian sum_j D_j^2 p.
Poly laplacian(const DunklContext& ctx, const Poly& p);

/// Delta_kappa^n p.
Poly laplacian_power(const DunklContext& ctx, const Poly& p, unsigned n);

/// q(D) p: each monomial x^beta of q acts as D_1^beta_1 ... D_d^beta_d.
Poly apply_operator_poly(const DunklContext& ctx, const Poly& q, const Poly& p);

/// <p, q>_kappa = (p(D) q)(0).
Rational pairing(const DunklContext& ctx, const Poly& p, const Poly& q);

}  // namespace dunkl
