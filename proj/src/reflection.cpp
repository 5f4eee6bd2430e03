#include "dunkl/reflection.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace dunkl {

namespace {

RationalVector unit_vector(std::size_t d, std::size_t i) {
  RationalVector v(d);
  v[i] = 1;
  return v;
}

RationalVector difference_root(std::size_t d, std::size_t i, std::size_t j, int sign) {
  RationalVector v(d);
  v[i] = 1;
  v[j] = sign;
  return v;
}

bool parallel(const RationalVector& a, const RationalVector& b) {
  // a and b are parallel iff every 2x2 minor vanishes
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

std::size_t parse_index(std::string_view text, std::string_view descriptor) {
  if (text.empty()) throw std::invalid_argument("bad group descriptor '" + std::string(descriptor) + "'");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad group descriptor '" + std::string(descriptor) + "'");
  return std::stoul(std::string(text));
}

}  // namespace

std::size_t GroupSpec::orbit_count() const {
  switch (family) {
    case GroupFamily::Z2:
      return dimension;
    case GroupFamily::A:
    case GroupFamily::D:
      return 1;
    case GroupFamily::B:
      return 2;
    case GroupFamily::Custom:
      break;
  }
  throw std::logic_error("custom root systems have no fixed orbit count");
}

std::string GroupSpec::name() const {
  switch (family) {
    case GroupFamily::Z2:
      return "z2^" + std::to_string(dimension);
    case GroupFamily::A:
      return "a" + std::to_string(dimension - 1);
    case GroupFamily::B:
      return "b" + std::to_string(dimension);
    case GroupFamily::D:
      return "d" + std::to_string(dimension);
    case GroupFamily::Custom:
      return "custom" + std::to_string(dimension);
  }
  return "?";
}

GroupSpec parse_group(std::string_view descriptor) {
  std::string lower;
  for (char c : descriptor)
    if (!std::isspace(static_cast<unsigned char>(c))) lower.push_back(static_cast<char>(std::tolower(c)));
  std::string_view s = lower;
  if (s.starts_with("z2^")) return {GroupFamily::Z2, parse_index(s.substr(3), descriptor)};
  if (s.starts_with("a")) return {GroupFamily::A, parse_index(s.substr(1), descriptor) + 1};
  if (s.starts_with("b")) return {GroupFamily::B, parse_index(s.substr(1), descriptor)};
  if (s.starts_with("d")) return {GroupFamily::D, parse_index(s.substr(1), descriptor)};
  throw std::invalid_argument("unknown group family '" + std::string(descriptor) + "'");
}

// ------------------------------------------------------------- RootSystem

RootSystem::RootSystem(std::size_t dimension, std::vector<RationalVector> positive_roots,
                       std::vector<std::size_t> orbit_of, RationalVector kappa_by_orbit)
    : dim_(dimension),
      roots_(std::move(positive_roots)),
      orbit_of_(std::move(orbit_of)),
      kappa_by_orbit_(std::move(kappa_by_orbit)) {
  if (dim_ < 2) throw std::invalid_argument("dimension must be at least 2");
  if (dim_ > kMaxVariables / 2) throw std::invalid_argument("dimension too large");
  if (orbit_of_.size() != roots_.size()) throw std::invalid_argument("orbit map does not cover the roots");
  for (const auto& k : kappa_by_orbit_)
    if (sgn(k) < 0) throw std::invalid_argument("multiplicities must be non-negative");
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].size() != dim_) throw std::invalid_argument("root has wrong length");
    if (dot(roots_[i], roots_[i]) == 0) throw std::invalid_argument("zero root");
    if (orbit_of_[i] >= kappa_by_orbit_.size()) throw std::invalid_argument("root orbit has no multiplicity");
    for (std::size_t j = 0; j < i; ++j)
      if (parallel(roots_[i], roots_[j])) throw std::invalid_argument("roots must be pairwise non-parallel");
  }
}

std::size_t RootSystem::find(std::span<const Rational> alpha) const {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (std::equal(alpha.begin(), alpha.end(), roots_[i].begin(), roots_[i].end())) return i;
  return roots_.size();
}

// ----------------------------------------------------------- DunklContext

DunklContext::DunklContext(GroupSpec group, RootSystem roots)
    : group_(group), roots_(std::move(roots)) {
  lambda_ = Rational(static_cast<long>(roots_.dimension()), 2) - 1;
  for (std::size_t i = 0; i < roots_.size(); ++i) lambda_ += roots_.kappa(i);
  lambda_.canonicalize();
}

bool DunklContext::kappa_is_zero() const {
  for (const auto& k : roots_.kappa_by_orbit())
    if (!is_zero(k)) return false;
  return true;
}

DunklContext make_context(GroupFamily family, std::size_t d, const RationalVector& kappa_by_orbit) {
  return make_context(GroupSpec{family, d}, kappa_by_orbit);
}

DunklContext make_context(const GroupSpec& group, const RationalVector& kappa_by_orbit) {
  const std::size_t d = group.dimension;
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  if (group.family == GroupFamily::Custom) throw std::invalid_argument("use make_custom_context for explicit roots");
  if (kappa_by_orbit.size() != group.orbit_count())
    throw std::invalid_argument(group.name() + " expects " + std::to_string(group.orbit_count()) +
                                " multiplicities, got " + std::to_string(kappa_by_orbit.size()));

  std::vector<RationalVector> roots;
  std::vector<std::size_t> orbit;
  switch (group.family) {
    case GroupFamily::Z2:
      for (std::size_t i = 0; i < d; ++i) {
        roots.push_back(unit_vector(d, i));
        orbit.push_back(i);
      }
      break;
    case GroupFamily::A:
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          roots.push_back(difference_root(d, i, j, -1));
          orbit.push_back(0);
        }
      break;
    case GroupFamily::B:
    case GroupFamily::D: {
      const bool with_short = group.family == GroupFamily::B;
      if (with_short)
        for (std::size_t i = 0; i < d; ++i) {
          roots.push_back(unit_vector(d, i));
          orbit.push_back(0);
        }
      const std::size_t long_orbit = with_short ? 1 : 0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          roots.push_back(difference_root(d, i, j, -1));
          orbit.push_back(long_orbit);
          roots.push_back(difference_root(d, i, j, +1));
          orbit.push_back(long_orbit);
        }
      break;
    }
    case GroupFamily::Custom:
      break;
  }
  return DunklContext(group, RootSystem(d, std::move(roots), std::move(orbit), kappa_by_orbit));
}

DunklContext make_custom_context(std::size_t dimension, std::vector<RationalVector> positive_roots,
                                 std::vector<std::size_t> orbit_of, const RationalVector& kappa_by_orbit) {
  return DunklContext(GroupSpec{GroupFamily::Custom, dimension},
                      RootSystem(dimension, std::move(positive_roots), std::move(orbit_of), kappa_by_orbit));
}

RationalMatrix reflection_matrix(const DunklContext& ctx, std::span<const Rational> alpha) {
  if (ctx.roots().find(alpha) == ctx.roots().size())
    throw std::invalid_argument("vector is not a positive root of this system");
  return reflection_matrix_for(alpha);
}

double weight_eval(const DunklContext& ctx, std::span<const double> x) {
  if (x.size() != ctx.dimension()) throw std::invalid_argument("point has wrong dimension");
  double h = 1.0;
  const auto& rs = ctx.roots();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const double k = rs.kappa(i).get_d();
    if (k == 0.0) continue;
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s += rs.root(i)[j].get_d() * x[j];
    h *= std::pow(std::abs(s), k);
  }
  return h;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace dunkl
