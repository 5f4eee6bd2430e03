#pragma once

// Exact rational scalars. GMP's mpq_class keeps values in lowest terms with a
// positive denominator, so every Rational produced by arithmetic is canonical.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on bad input or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Rational make_rational(long num, long den = 1);

/// Exact value of a binary64 (every finite double is a dyadic rational).
Rational from_double(double x);

inline double to_double(const Rational& r) { return r.get_d(); }

/// Rising factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned n);

Integer factorial(unsigned n);

Integer binomial(unsigned n, unsigned k);

/// 2^k as an exact rational.
Rational pow2(unsigned k);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace dunkl
