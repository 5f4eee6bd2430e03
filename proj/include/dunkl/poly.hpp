#pragma once

// Sparse multivariate polynomials over exact rationals.
//
// A Poly is a map from exponent vectors to nonzero Rational coefficients. All
// monomials of a Poly share its dimension. Terms are kept in graded-lex order
// with the highest term first: larger total degree first, then larger exponent
// of x1, then x2, and so on. Axis indices in the C++ API are 0-based; the text
// form uses x1..xd.

#include "dunkl/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dunkl {

inline constexpr std::size_t kMaxVariables = 16;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t dimension);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial unit(std::size_t dimension, std::size_t axis);

  std::size_t dimension() const { return dim_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t axis) const { return exps_[axis]; }
  void set(std::size_t axis, unsigned exponent);

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.dim_ == b.dim_ && a.exps_ == b.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t dim_ = 0;
  std::uint16_t degree_ = 0;
};

/// Strict weak order placing the graded-lex larger monomial first.
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexDescending>;

  Poly() = default;
  explicit Poly(std::size_t dimension);

  static Poly constant(std::size_t dimension, const Rational& c);
  static Poly variable(std::size_t dimension, std::size_t axis);
  static Poly term(const Monomial& m, const Rational& c);

  std::size_t dimension() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree among the terms; -1 for the zero polynomial.
  int low_degree() const;
  bool is_homogeneous() const;

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Adds c·m in place, pruning a resulting zero coefficient.
  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_dimension(const Poly& other) const;

  std::size_t dim_ = 0;
  Terms terms_;
};

using RationalMatrix = std::vector<RationalVector>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Rational& c, const Poly& p);
Poly power(const Poly& p, unsigned k);

/// Formal partial derivative in x_{axis+1}.
Poly partial(const Poly& p, std::size_t axis);
/// Directional derivative sum_j xi_j d_j p.
Poly directional_derivative(const Poly& p, std::span<const Rational> xi);

Rational eval_rational(const Poly& p, std::span<const Rational> x);
double eval_float(const Poly& p, std::span<const double> x);

/// p(Mx) for a dimension x dimension matrix M.
Poly substitute_linear(const Poly& p, const RationalMatrix& m);

/// The linear form <a, x>.
Poly linear_form(std::span<const Rational> a);

/// Exact quotient of p by the linear form <a, x>. Throws std::logic_error when the
/// division leaves a remainder.
Poly divide_by_linear_form(const Poly& p, std::span<const Rational> a);

/// (p(x) - p(r_a x)) / <a, x>, where r_a is the reflection in the hyperplane a^perp.
Poly divided_difference(const Poly& p, std::span<const Rational> a);

RationalMatrix reflection_matrix_for(std::span<const Rational> a);

/// Nonzero homogeneous components ordered by increasing degree.
std::vector<std::pair<int, Poly>> homogeneous_parts(const Poly& p);
Poly homogeneous_part(const Poly& p, int degree);

/// ||x||^(2k) in `dimension` variables.
Poly norm_squared_power(std::size_t dimension, unsigned k);

/// All monomials of total degree n in graded-lex descending order.
std::vector<Monomial> monomials_of_degree(std::size_t dimension, unsigned n);

Poly parse_poly(std::string_view text, std::size_t dimension);
std::string format_poly(const Poly& p);

}  // namespace dunkl
