#pragma once

// Verification paths that share no code with the exact engine: Monte-Carlo
// quadrature of weighted spherical means, the classical Dirichlet integral for
// Z2^d, and a power-series evaluation of phi_alpha.

#include "dunkl/intertwine.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/reflection.hpp"

#include <cstdint>
#include <span>

namespace dunkl {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Samples per chunk. Every chunk draws from its own generator seeded from
/// (seed, chunk index), so the estimate depends only on (seed, samples).
inline constexpr std::uint64_t kMcChunkSize = 4096;

/// Ratio estimate of E[p(Y) h^2(Y)] / E[h^2(Y)] for Y uniform on the sphere
/// (normalized Gaussian directions). Chunks run under OpenMP and are reduced in
/// chunk order. Throws std::invalid_argument for samples == 0.
McEstimate mc_sphere_integral(const DunklContext& ctx, const Poly& p, std::uint64_t seed, std::uint64_t samples);

/// (1/omega) integral of prod y_i^(2 a_i) h^2 = prod (kappa_i + 1/2)_(a_i) / (lambda+1)_|a| on Z2^d.
/// `half_exponents` holds a. Throws std::invalid_argument for other families.
Rational dirichlet_monomial(const DunklContext& ctx, std::span<const unsigned> half_exponents);

/// Dirichlet formula extended linearly over p (odd monomials give 0).
Rational dirichlet_integrate(const DunklContext& ctx, const Poly& p);

/// Mean of g against the weight (1-t^2)^(lambda-1/2) on [-1, 1], through the
/// Beta-function ratios of the even moments: sum_k g_(2k) (1/2)_k / (lambda+1)_k.
/// Throws std::domain_error for lambda <= -1/2.
Rational gegenbauer_weight_mean(const UniPoly& g, const Rational& lambda);

/// Funk-Hecke coefficient by 1D integration: m!/(2 lambda)_m times the weighted
/// mean of phi C_m^lambda. Throws std::domain_error for lambda <= 0.
Rational funk_hecke_coeff_by_integration(unsigned m, const UniPoly& phi, const Rational& lambda);

/// phi_alpha(z) = Gamma(alpha+1) sum (-1)^n / (n! Gamma(alpha+n+1)) (z/2)^(2n), alpha >= -1/2.
double bessel_phi(double alpha, double z);

/// Partial sum with `terms` terms (n = 0 .. terms-1).
double bessel_phi_partial(double alpha, double z, unsigned terms);

}  // namespace dunkl
