#pragma once

// h-harmonic polynomials: the projection onto ker(Delta_kappa), the canonical
// decomposition P_n = H_n + |x|^2 H_{n-2} + ..., exact bases of H_{kappa,n} and
// the weighted orthogonality constant.

#include "dunkl/poly.hpp"
#include "dunkl/reflection.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace dunkl {

struct HarmonicComponent {
  unsigned index = 0;  // i: the component multiplies |x|^(2i) and has degree n - 2i
  Poly poly;
};

struct HarmonicDecomposition {
  unsigned degree = 0;
  std::vector<HarmonicComponent> components;  // i = 0 .. floor(n/2)

  /// sum_i |x|^(2i) p_{n-2i}.
  Poly reconstruct() const;
};

/// proj_{kappa,n} P = sum_j |x|^(2j) Delta^j P / (4^j j! (-lambda-n+1)_j).
/// Throws std::invalid_argument unless P is homogeneous of degree n (or zero).
Poly proj(const DunklContext& ctx, unsigned n, const Poly& p);

using Projector = std::function<Poly(const DunklContext&, unsigned, const Poly&)>;

/// p_{n-2i} = proj_{n-2i}(Delta^i p) / (4^i i! (lambda+1+n-2i)_i).
/// Throws std::invalid_argument for non-homogeneous p.
HarmonicDecomposition canonical_decompose(const DunklContext& ctx, const Poly& p);

/// Same formula with a caller-supplied projector (fault injection in verification runs).
HarmonicDecomposition canonical_decompose_with(const DunklContext& ctx, const Poly& p, const Projector& projector);

bool is_h_harmonic(const DunklContext& ctx, const Poly& p);

/// C(n+d-1, d-1) - C(n+d-3, d-1), the second term dropped for n < 2.
std::size_t harmonic_dimension(std::size_t d, unsigned n);

/// Exact basis of ker(Delta_kappa : P_n -> P_{n-2}).
std::vector<Poly> h_harmonic_basis(const DunklContext& ctx, unsigned n);

/// <p, q>_kappa / (2^m (lambda+1)_m) for p in H_l, q in H_m (zero when l != m).
Rational orthogonality_rhs(const DunklContext& ctx, const Poly& p, const Poly& q);

/// Representative of p modulo |x|^2 - 1: every |x|^(2i) p_{n-2i} of every
/// homogeneous part is replaced by p_{n-2i}. Two polynomials agree on the unit
/// sphere iff their representatives are equal.
Poly sphere_canonical_form(const DunklContext& ctx, const Poly& p);

}  // namespace dunkl
