#pragma once

// Root systems with rational coordinates and the constants derived from a
// multiplicity function.
//
// Catalog (positive roots, orbit order used by the kappa list):
//   Z2^d      e_i                          d orbits, one per axis
//   A_{n}     e_i - e_j (i < j) in R^{n+1}  1 orbit
//   B_d       e_i ; e_i - e_j, e_i + e_j   2 orbits: short roots, then long roots
//   D_d       e_i - e_j, e_i + e_j         1 orbit

#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

enum class GroupFamily { Z2, A, B, D, Custom };

struct GroupSpec {
  GroupFamily family = GroupFamily::Z2;
  std::size_t dimension = 2;

  /// Number of kappa values the family expects.
  std::size_t orbit_count() const;
  std::string name() const;
};

/// Parses "z2^D", "aN" (A_N in R^{N+1}), "bD", "dD".
GroupSpec parse_group(std::string_view descriptor);

class RootSystem {
 public:
  RootSystem(std::size_t dimension, std::vector<RationalVector> positive_roots, std::vector<std::size_t> orbit_of,
             RationalVector kappa_by_orbit);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return roots_.size(); }
  const std::vector<RationalVector>& positive_roots() const { return roots_; }
  const RationalVector& root(std::size_t i) const { return roots_[i]; }
  std::size_t orbit_of(std::size_t i) const { return orbit_of_[i]; }
  const Rational& kappa(std::size_t i) const { return kappa_by_orbit_[orbit_of_[i]]; }
  const RationalVector& kappa_by_orbit() const { return kappa_by_orbit_; }

  /// Index of `alpha` in the positive roots, or size() when absent.
  std::size_t find(std::span<const Rational> alpha) const;

 private:
  std::size_t dim_;
  std::vector<RationalVector> roots_;
  std::vector<std::size_t> orbit_of_;
  RationalVector kappa_by_orbit_;
};

class DunklContext {
 public:
  DunklContext(GroupSpec group, RootSystem roots);

  const GroupSpec& group() const { return group_; }
  const RootSystem& roots() const { return roots_; }
  std::size_t dimension() const { return roots_.dimension(); }
  /// d/2 - 1 + sum over positive roots of kappa.
  const Rational& lambda() const { return lambda_; }
  bool kappa_is_zero() const;

 private:
  GroupSpec group_;
  RootSystem roots_;
  Rational lambda_;
};

/// Builds a catalog root system. Throws std::invalid_argument for d < 2, negative
/// kappa or a kappa list whose length differs from the family's orbit count.
DunklContext make_context(GroupFamily family, std::size_t dimension, const RationalVector& kappa_by_orbit);
DunklContext make_context(const GroupSpec& group, const RationalVector& kappa_by_orbit);

/// Context over explicitly supplied positive roots (used to test normalization
/// independence). Roots must be pairwise non-parallel.
DunklContext make_custom_context(std::size_t dimension, std::vector<RationalVector> positive_roots,
                                 std::vector<std::size_t> orbit_of, const RationalVector& kappa_by_orbit);

/// r_alpha for a positive root alpha of the context.
RationalMatrix reflection_matrix(const DunklContext& ctx, std::span<const Rational> alpha);

/// h_kappa(x) = prod |<alpha, x>|^kappa_alpha.
double weight_eval(const DunklContext& ctx, std::span<const double> x);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace dunkl
