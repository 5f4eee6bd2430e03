#pragma once

// The Dunkl intertwining operator V_kappa, Gegenbauer polynomials and the
// Funk-Hecke identity for zonal kernels.
//
// V_kappa is characterized by V P_n in P_n, V 1 = 1 and D_xi V = V d_xi. It is
// built one degree at a time: the images of the degree-n monomials solve the
// linear system D_j(V x^g) = V(d_j x^g), j = 1..d, whose right-hand sides only
// involve degree n-1.
//
// Two-block polynomials ("bipolys") are Polys in 2d variables: x occupies axes
// 0..d-1 and y occupies axes d..2d-1.

#include "dunkl/poly.hpp"
#include "dunkl/reflection.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <string_view>
#include <vector>

namespace dunkl {

/// Polynomial in one variable t, coefficients by increasing power, trailing zeros pruned.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly monomial(unsigned power, const Rational& c = 1);
  /// Same grammar as Poly with the single variable written t (or x1).
  static UniPoly parse(std::string_view text);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(unsigned power) const;
  Rational evaluate(const Rational& t) const;

  UniPoly& operator+=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::string format_unipoly(const UniPoly& p);

/// C_m^lambda via the three-term recurrence. Throws std::domain_error for lambda <= 0.
UniPoly gegenbauer(unsigned m, const Rational& lambda);

class Intertwiner {
 public:
  explicit Intertwiner(const DunklContext& ctx);

  const DunklContext& context() const { return ctx_; }

  /// V_kappa p for any polynomial (handled degree by degree).
  Poly apply(const Poly& p) const;

  /// V_kappa on the monomials of degree n, in monomials_of_degree order.
  std::vector<Poly> degree_images(unsigned n) const;

 private:
  struct DegreeTable {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t, GradedLexDescending> index;
    std::vector<Poly> images;
  };

  const DegreeTable& table(unsigned n) const;
  void extend_locked(unsigned n) const;

  DunklContext ctx_;
  mutable std::mutex mutex_;
  mutable std::deque<DegreeTable> tables_;
};

/// V_kappa p with a fresh table.
Poly intertwiner_apply(const DunklContext& ctx, const Poly& p);

/// a_{kappa,m}(phi), extended linearly from
/// a(t^(m+2n)) = (m+2n)! / (2^(m+2n) n! (lambda+1)_(m+n)) and a(t^l) = 0 otherwise.
/// Throws std::domain_error for lambda <= 0.
Rational funk_hecke_coeff(const DunklContext& ctx, unsigned m, const UniPoly& phi);

/// phi(<x, y>) as a bipoly in 2d variables.
Poly zonal_bipoly(std::size_t d, const UniPoly& phi);

/// Applies V_kappa to the y block, x monomials riding along as coefficients.
Poly apply_intertwiner_y(const Intertwiner& v, const Poly& bipoly);

/// x -> (1/omega) integral of K(x, y) q(y) h^2(y) d(sigma)(y).
Poly integrate_y(const DunklContext& ctx, const Poly& bipoly, const Poly& q);

struct FunkHeckeResult {
  bool holds = false;
  Rational a;
  Poly lhs;  // integral side, reduced modulo |x|^2 - 1
  Poly rhs;  // a q
};

/// Accepts lambda = 0 (d = 2, kappa = 0): the monomial rule for a stays finite there.
FunkHeckeResult funk_hecke_check(const DunklContext& ctx, const UniPoly& phi, const Poly& q);
FunkHeckeResult funk_hecke_check(const Intertwiner& v, const UniPoly& phi, const Poly& q);

/// P_n(x, y) = ((n + lambda)/lambda) V_kappa[C_n^lambda(<x, .>)](y).
Poly reproducing_kernel(const DunklContext& ctx, unsigned n);
Poly reproducing_kernel(const Intertwiner& v, unsigned n);

/// Whether the kernel integral against q reduces to delta_{mn} q on the sphere.
bool reproducing_check(const DunklContext& ctx, unsigned n, const Poly& q);
bool reproducing_check(const Intertwiner& v, unsigned n, const Poly& q);

/// Splits a bipoly into x-monomial -> polynomial in y (both d-dimensional).
std::map<Monomial, Poly, GradedLexDescending> split_bipoly(const Poly& bipoly);

}  // namespace dunkl
