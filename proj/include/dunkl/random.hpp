#pragma once

// Seeded generators for property checks and benchmarks.

#include "dunkl/poly.hpp"

#include <cstdint>
#include <random>

namespace dunkl {

using Rng = std::mt19937_64;

/// Nonzero rational with numerator in [-6, 6] and denominator in [1, 4].
Rational random_rational(Rng& rng);

/// Homogeneous polynomial of the given degree with up to `max_terms` random
/// terms (0 means every monomial of that degree gets a random coefficient).
/// May return a sparse polynomial but never the zero polynomial.
Poly random_homogeneous(std::size_t dimension, unsigned degree, Rng& rng, std::size_t max_terms = 0);

/// Polynomial of degree at most max_degree, a random subset of homogeneous parts.
Poly random_poly(std::size_t dimension, unsigned max_degree, Rng& rng, std::size_t terms_per_degree = 3);

}  // namespace dunkl
