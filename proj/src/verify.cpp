#include "dunkl/verify.hpp"

#include "dunkl/harmonic.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/oracle.hpp"
#include "dunkl/random.hpp"
#include "dunkl/reference.hpp"
#include "dunkl/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

RationalVector kappas(std::initializer_list<std::pair<long, long>> values) {
  RationalVector out;
  for (const auto& [n, d] : values) out.push_back(make_rational(n, d));
  return out;
}

std::string describe_vector(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

std::string describe_rationals(const std::vector<Rational>& v) { return describe_vector(v); }

std::string degrees_up_to(unsigned n) { return "<=" + std::to_string(n); }

std::string double_text(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

class Check {
 public:
  Check(std::string name, const CorpusEntry& entry, std::string degrees) {
    result_.name = std::move(name);
    result_.group = entry.ctx.group().name();
    result_.kappa = kappa_label(entry.ctx);
    result_.degrees = std::move(degrees);
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  void fail(const std::string& what) {
    if (result_.passed) {
      result_.passed = false;
      result_.counterexample = what;
    }
  }

  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

struct Env {
  const CorpusEntry& entry;
  const VerifyOptions& options;
  std::size_t index;

  const DunklContext& ctx() const { return entry.ctx; }
  std::size_t dim() const { return entry.ctx.dimension(); }
  unsigned max_degree() const { return options.max_degree; }

  Rng rng(std::string_view check) const {
    std::uint64_t h = options.seed * 0x9E3779B97F4A7C15ULL + index;
    for (char c : check) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001B3ULL;
    return Rng(h);
  }
};

using CheckFn = std::function<void(const Env&, Check&)>;

std::vector<Poly> bases_up_to(const DunklContext& ctx, unsigned max_m) {
  std::vector<Poly> out;
  for (unsigned m = 0; m <= max_m; ++m)
    for (auto& q : h_harmonic_basis(ctx, m)) out.push_back(std::move(q));
  return out;
}

std::string pair_text(const char* a, const Poly& p, const char* b, const Poly& q) {
  return std::string(a) + " = " + format_poly(p) + "; " + b + " = " + format_poly(q);
}

// ---- polyring ----

void ring_laws(const Env& env, Check& check) {
  auto rng = env.rng("ring-laws");
  for (int t = 0; t < 20; ++t) {
    const Poly a = random_poly(env.dim(), 3, rng);
    const Poly b = random_poly(env.dim(), 3, rng);
    const Poly c = random_poly(env.dim(), 2, rng);
    auto inputs = [&] { return "a = " + format_poly(a) + "; b = " + format_poly(b) + "; c = " + format_poly(c); };
    check.expect((a * b) * c == a * (b * c), [&] { return "associativity: " + inputs(); });
    check.expect(a * (b + c) == a * b + a * c, [&] { return "distributivity: " + inputs(); });
    check.expect(a * b == b * a && a + b == b + a, [&] { return "commutativity: " + inputs(); });
    check.expect((a - a).is_zero(), [&] { return "additive inverse: " + inputs(); });
  }
}

void homogeneous_parts_sum(const Env& env, Check& check) {
  auto rng = env.rng("homogeneous-parts");
  for (int t = 0; t < 20; ++t) {
    const Poly p = random_poly(env.dim(), env.max_degree(), rng);
    Poly sum(env.dim());
    bool homogeneous = true;
    for (const auto& [deg, part] : homogeneous_parts(p)) {
      sum += part;
      homogeneous = homogeneous && part.is_homogeneous() && part.degree() == deg;
    }
    check.expect(sum == p && homogeneous, [&] { return pair_text("p", p, "sum of parts", sum); });
  }
}

void parse_format(const Env& env, Check& check) {
  auto rng = env.rng("parse-format");
  for (int t = 0; t < 30; ++t) {
    const Poly p = random_poly(env.dim(), env.max_degree(), rng);
    const std::string text = format_poly(p);
    const Poly back = parse_poly(text, env.dim());
    check.expect(back == p, [&] { return "text = " + text + "; reparsed = " + format_poly(back); });
  }
}

void divided_difference_exact(const Env& env, Check& check) {
  auto rng = env.rng("divided-difference");
  const auto& roots = env.ctx().roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const auto& alpha = roots.root(r);
    for (int t = 0; t < 4; ++t) {
      const Poly p = random_poly(env.dim(), env.max_degree(), rng);
      const Poly q = divided_difference(p, alpha);
      const Poly diff = p - substitute_linear(p, reflection_matrix_for(alpha));
      const Poly back = q * linear_form(alpha);
      check.expect(back == diff, [&] {
        return "alpha = " + describe_vector(alpha) + "; " + pair_text("p - p(r x)", diff, "quotient * <alpha,x>", back);
      });
    }
  }
}

// ---- reflection ----

RationalVector reflect(std::span<const Rational> alpha, std::span<const Rational> beta) {
  const Rational c = 2 * dot(alpha, beta) / dot(alpha, alpha);
  RationalVector out(beta.begin(), beta.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * alpha[i];
  return out;
}

// Index of +-v among the positive roots, or size().
std::size_t find_up_to_sign(const RootSystem& roots, RationalVector v) {
  const std::size_t idx = roots.find(v);
  if (idx != roots.size()) return idx;
  for (auto& x : v) x = -x;
  return roots.find(v);
}

void roots_permuted(const Env& env, Check& check) {
  const auto& roots = env.ctx().roots();
  for (std::size_t a = 0; a < roots.size(); ++a) {
    std::set<std::size_t> image;
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const auto img = reflect(roots.root(a), roots.root(b));
      const std::size_t idx = find_up_to_sign(roots, img);
      check.expect(idx != roots.size(), [&] {
        return "r_alpha beta left the root set: alpha = " + describe_vector(roots.root(a)) +
               "; beta = " + describe_vector(roots.root(b)) + "; image = " + describe_vector(img);
      });
      image.insert(idx);
    }
    check.expect(image.size() == roots.size(),
                 [&] { return "r_alpha is not a bijection for alpha = " + describe_vector(roots.root(a)); });
  }
}

void kappa_orbit_constant(const Env& env, Check& check) {
  const auto& roots = env.ctx().roots();
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const std::size_t idx = find_up_to_sign(roots, reflect(roots.root(a), roots.root(b)));
      if (idx == roots.size()) continue;  // reported by roots-permuted
      check.expect(roots.kappa(idx) == roots.kappa(b), [&] {
        return "kappa changes along an orbit: beta = " + describe_vector(roots.root(b)) + " (" +
               to_string(roots.kappa(b)) + ") maps to " + describe_vector(roots.root(idx)) + " (" +
               to_string(roots.kappa(idx)) + ")";
      });
    }
}

void rescaling_invariance(const Env& env, Check& check) {
  const auto& roots = env.ctx().roots();
  std::vector<RationalVector> scaled;
  std::vector<std::size_t> orbit;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const Rational factor = r % 2 == 0 ? make_rational(2) : make_rational(3, 2);
    RationalVector v = roots.root(r);
    for (auto& x : v) x *= factor;
    scaled.push_back(std::move(v));
    orbit.push_back(roots.orbit_of(r));
  }
  const DunklContext other = make_custom_context(env.dim(), scaled, orbit, roots.kappa_by_orbit());
  check.expect(other.lambda() == env.ctx().lambda(), [&] {
    return "lambda = " + to_string(env.ctx().lambda()) + " vs rescaled " + to_string(other.lambda());
  });
  auto rng = env.rng("rescaling-invariance");
  for (int t = 0; t < 4; ++t) {
    const Poly p = random_poly(env.dim(), env.max_degree(), rng);
    for (std::size_t j = 0; j < env.dim(); ++j) {
      const Poly a = dunkl_axis(env.ctx(), j, p);
      const Poly b = dunkl_axis(other, j, p);
      check.expect(a == b, [&] { return "p = " + format_poly(p) + "; " + pair_text("D_j p", a, "rescaled", b); });
    }
    const Rational s1 = sphere_integrate(env.ctx(), p);
    const Rational s2 = sphere_integrate(other, p);
    check.expect(s1 == s2, [&] {
      return "p = " + format_poly(p) + "; integral = " + to_string(s1) + " vs rescaled " + to_string(s2);
    });
  }
}

// ---- dunkl ----

RationalVector random_direction(std::size_t d, Rng& rng) {
  RationalVector xi(d);
  for (auto& x : xi) x = random_rational(rng);
  return xi;
}

void commutativity(const Env& env, Check& check) {
  auto rng = env.rng("commutativity");
  for (int t = 0; t < 12; ++t) {
    const auto xi = random_direction(env.dim(), rng);
    const auto eta = random_direction(env.dim(), rng);
    const Poly p = random_poly(env.dim(), env.max_degree(), rng);
    const Poly a = dunkl_apply(env.ctx(), xi, dunkl_apply(env.ctx(), eta, p));
    const Poly b = dunkl_apply(env.ctx(), eta, dunkl_apply(env.ctx(), xi, p));
    check.expect(a == b, [&] {
      return "xi = " + describe_vector(xi) + "; eta = " + describe_vector(eta) + "; p = " + format_poly(p) + "; " +
             pair_text("D_xi D_eta p", a, "D_eta D_xi p", b);
    });
  }
}

void pairing_symmetry(const Env& env, Check& check) {
  auto rng = env.rng("pairing-symmetry");
  const unsigned top = std::min(env.max_degree(), 4u);
  for (unsigned n = 0; n <= top; ++n)
    for (int t = 0; t < 2; ++t) {
      const Poly p = random_homogeneous(env.dim(), n, rng, 4);
      const Poly q = random_homogeneous(env.dim(), n, rng, 4);
      const Rational a = pairing(env.ctx(), p, q);
      const Rational b = pairing(env.ctx(), q, p);
      check.expect(a == b, [&] { return pair_text("p", p, "q", q) + "; <p,q> = " + to_string(a) + "; <q,p> = " + to_string(b); });
    }
}

void degree_orthogonality(const Env& env, Check& check) {
  auto rng = env.rng("degree-orthogonality");
  const unsigned top = std::min(env.max_degree(), 4u);
  for (unsigned n = 0; n <= top; ++n)
    for (unsigned m = 0; m <= top; ++m) {
      if (m == n) continue;
      const Poly p = random_homogeneous(env.dim(), n, rng, 3);
      const Poly q = random_homogeneous(env.dim(), m, rng, 3);
      const Rational v = pairing(env.ctx(), p, q);
      check.expect(is_zero(v), [&] { return pair_text("p", p, "q", q) + "; <p,q> = " + to_string(v) + " (expected 0)"; });
    }
}

void positive_definite(const Env& env, Check& check) {
  auto rng = env.rng("positive-definite");
  const unsigned top = std::min(env.max_degree(), 4u);
  for (unsigned n = 0; n <= top; ++n)
    for (int t = 0; t < 2; ++t) {
      const Poly p = random_homogeneous(env.dim(), n, rng, 4);
      const Rational v = pairing(env.ctx(), p, p);
      check.expect(v > 0, [&] { return "p = " + format_poly(p) + "; <p,p> = " + to_string(v); });
    }
}

void laplacian_consistency(const Env& env, Check& check) {
  auto rng = env.rng("laplacian-consistency");
  const Poly norm2 = norm_squared_power(env.dim(), 1);
  for (int t = 0; t < 6; ++t) {
    const Poly p = random_poly(env.dim(), env.max_degree(), rng);
    const Poly a = laplacian(env.ctx(), p);
    const Poly b = apply_operator_poly(env.ctx(), norm2, p);
    check.expect(a == b, [&] { return "p = " + format_poly(p) + "; " + pair_text("laplacian", a, "|D|^2 p", b); });
  }
}

void kappa_zero_reduction(const Env& env, Check& check) {
  const DunklContext zero = make_context(env.ctx().group(), RationalVector(env.ctx().group().orbit_count(), Rational(0)));
  auto rng = env.rng("kappa-zero-reduction");
  for (int t = 0; t < 6; ++t) {
    const Poly p = random_poly(env.dim(), env.max_degree(), rng);
    const auto xi = random_direction(env.dim(), rng);
    const Poly a = dunkl_apply(zero, xi, p);
    const Poly b = directional_derivative(p, xi);
    check.expect(a == b, [&] { return "xi = " + describe_vector(xi) + "; p = " + format_poly(p) + "; " + pair_text("D_xi p", a, "d_xi p", b); });
    Poly classical(env.dim());
    for (std::size_t j = 0; j < env.dim(); ++j) classical += partial(partial(p, j), j);
    const Poly lap = laplacian(zero, p);
    check.expect(lap == classical, [&] { return "p = " + format_poly(p) + "; " + pair_text("laplacian", lap, "classical", classical); });
  }
}

void serial_reference(const Env& env, Check& check) {
  auto rng = env.rng("serial-reference");
  for (int t = 0; t < 4; ++t) {
    const Poly p = random_poly(env.dim(), env.max_degree(), rng);
    const auto xi = random_direction(env.dim(), rng);
    const Poly a = dunkl_apply(env.ctx(), xi, p);
    const Poly b = reference::dunkl_apply_serial(env.ctx(), xi, p);
    check.expect(a == b, [&] { return "p = " + format_poly(p) + "; " + pair_text("parallel", a, "serial", b); });
    const Poly la = laplacian(env.ctx(), p);
    const Poly lb = reference::laplacian_serial(env.ctx(), p);
    check.expect(la == lb, [&] { return "p = " + format_poly(p) + "; " + pair_text("parallel laplacian", la, "serial", lb); });
  }
}

// ---- harmonic ----

Poly flipped_proj(const DunklContext& ctx, unsigned n, const Poly& p) { return 2 * p - proj(ctx, n, p); }

HarmonicDecomposition decompose(const Env& env, const Poly& p) {
  if (env.options.fault == FaultInjection::ProjSignFlip) return canonical_decompose_with(env.ctx(), p, flipped_proj);
  return canonical_decompose(env.ctx(), p);
}

void reconstruction(const Env& env, Check& check) {
  auto rng = env.rng("reconstruction");
  for (unsigned n = 0; n <= env.max_degree(); ++n)
    for (int t = 0; t < 2; ++t) {
      const Poly p = random_homogeneous(env.dim(), n, rng, 6);
      const auto dec = decompose(env, p);
      const Poly back = dec.reconstruct();
      check.expect(back == p, [&] { return pair_text("p", p, "reconstructed", back); });
      for (const auto& c : dec.components)
        check.expect(is_h_harmonic(env.ctx(), c.poly), [&] {
          return "p = " + format_poly(p) + "; component " + std::to_string(c.index) + " = " + format_poly(c.poly) +
                 " has laplacian " + format_poly(laplacian(env.ctx(), c.poly));
        });
    }
}

void decomposition_orthogonality(const Env& env, Check& check) {
  auto rng = env.rng("decomposition-orthogonality");
  const unsigned top = std::min(env.max_degree(), 6u);
  for (unsigned n = 2; n <= top; ++n) {
    const Poly p = random_homogeneous(env.dim(), n, rng, 5);
    const auto dec = decompose(env, p);
    std::vector<Poly> pieces;
    for (const auto& c : dec.components) pieces.push_back(norm_squared_power(env.dim(), c.index) * c.poly);
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        const Rational v = pairing(env.ctx(), pieces[i], pieces[j]);
        check.expect(is_zero(v), [&] {
          return "p = " + format_poly(p) + "; <piece " + std::to_string(i) + ", piece " + std::to_string(j) +
                 "> = " + to_string(v);
        });
      }
  }
}

void proj_idempotence(const Env& env, Check& check) {
  auto rng = env.rng("proj-idempotence");
  for (unsigned n = 0; n <= env.max_degree(); ++n) {
    const Poly p = random_homogeneous(env.dim(), n, rng, 5);
    const Poly once = proj(env.ctx(), n, p);
    const Poly twice = proj(env.ctx(), n, once);
    check.expect(once == twice, [&] { return "p = " + format_poly(p) + "; " + pair_text("proj p", once, "proj proj p", twice); });
  }
}

void basis_dimension(const Env& env, Check& check) {
  for (unsigned n = 0; n <= env.max_degree(); ++n) {
    const auto basis = h_harmonic_basis(env.ctx(), n);
    const std::size_t expected = harmonic_dimension(env.dim(), n);
    check.expect(basis.size() == expected, [&] {
      return "n = " + std::to_string(n) + "; basis size " + std::to_string(basis.size()) + " vs " + std::to_string(expected);
    });
    for (const auto& b : basis)
      check.expect(is_h_harmonic(env.ctx(), b), [&] { return "n = " + std::to_string(n) + "; non-harmonic element " + format_poly(b); });
  }
}

void orthogonality_vs_sphere(const Env& env, Check& check) {
  const auto basis = bases_up_to(env.ctx(), std::min(env.max_degree(), 3u));
  for (const auto& p : basis)
    for (const auto& q : basis) {
      const Rational a = orthogonality_rhs(env.ctx(), p, q);
      const Rational b = sphere_integrate(env.ctx(), p * q);
      check.expect(a == b, [&] { return pair_text("p", p, "q", q) + "; rhs = " + to_string(a) + "; integral = " + to_string(b); });
    }
}

// ---- spherical ----

void quadrature_consistency(const Env& env, Check& check) {
  auto rng = env.rng("quadrature-consistency");
  const unsigned top_m = std::min(env.max_degree(), 3u);
  for (unsigned m = 0; m <= top_m; ++m) {
    const auto basis = h_harmonic_basis(env.ctx(), m);
    for (unsigned l = 0; l + m <= env.max_degree() + 2; ++l) {
      const Poly& q = basis[rng() % basis.size()];
      const Poly p = random_homogeneous(env.dim(), l, rng, 4);
      const Rational a = sphere_integrate(env.ctx(), q * p);
      const Rational b = pair_integral(env.ctx(), q, p);
      check.expect(a == b, [&] { return pair_text("q", q, "p", p) + "; integral = " + to_string(a) + "; pair_integral = " + to_string(b); });
    }
  }
}

// f and q drawn for the series checks; f carries a degree-m offset so every
// coefficient of the series is exercised.
struct SeriesCase {
  Poly q;
  Poly f;
  unsigned m;
};

std::vector<SeriesCase> series_cases(const Env& env, std::string_view tag, unsigned max_m) {
  auto rng = env.rng(tag);
  std::vector<SeriesCase> out;
  for (unsigned m = 0; m <= max_m; ++m) {
    const auto basis = h_harmonic_basis(env.ctx(), m);
    for (int t = 0; t < 2; ++t)
      out.push_back({basis[rng() % basis.size()], random_poly(env.dim(), env.max_degree(), rng, 4), m});
  }
  return out;
}

unsigned full_terms(int deg_f, unsigned m) {
  if (deg_f < static_cast<int>(m)) return 0;
  return (static_cast<unsigned>(deg_f) - m + 1) / 2;
}

void pizzetti_exactness(const Env& env, Check& check) {
  for (const auto& c : series_cases(env, "pizzetti-exactness", 3)) {
    const unsigned big_n = full_terms(c.f.degree(), c.m);
    const auto series = extended_pizzetti(env.ctx(), c.q, c.f, big_n);
    const auto exact = weighted_mean_polynomial(env.ctx(), c.q, c.f);
    std::vector<Rational> from_series(std::max<std::size_t>(exact.size(), c.m + 2 * big_n + 1), Rational(0));
    for (unsigned n = 0; n <= big_n; ++n) from_series[c.m + 2 * n] = series.coefficients[n];
    std::vector<Rational> padded = exact;
    padded.resize(from_series.size(), Rational(0));
    check.expect(padded == from_series, [&] {
      return pair_text("q", c.q, "f", c.f) + "; integral coefficients " + describe_rationals(padded) + "; series " +
             describe_rationals(from_series);
    });
    const Rational r = make_rational(3, 7);
    Rational direct = 0;
    Rational rp = 1;
    for (const auto& a : exact) {
      direct += a * rp;
      rp *= r;
    }
    check.expect(direct == series.evaluate(r), [&] {
      return pair_text("q", c.q, "f", c.f) + "; at r = 3/7 integral " + to_string(direct) + " vs series " +
             to_string(series.evaluate(r));
    });
  }
}

void pizzetti_truncation(const Env& env, Check& check) {
  for (const auto& c : series_cases(env, "pizzetti-truncation", 3)) {
    const unsigned big_n = full_terms(c.f.degree(), c.m);
    const auto exact = weighted_mean_polynomial(env.ctx(), c.q, c.f);
    for (unsigned small = 0; small < big_n; ++small) {
      const auto series = extended_pizzetti(env.ctx(), c.q, c.f, small);
      std::vector<Rational> residual = exact;
      residual.resize(std::max<std::size_t>(residual.size(), c.m + 2 * small + 1), Rational(0));
      for (unsigned n = 0; n <= small; ++n) residual[c.m + 2 * n] -= series.coefficients[n];
      std::size_t lowest = residual.size();
      for (std::size_t k = 0; k < residual.size(); ++k)
        if (!is_zero(residual[k])) {
          lowest = k;
          break;
        }
      check.expect(lowest > c.m + 2 * small, [&] {
        return pair_text("q", c.q, "f", c.f) + "; N = " + std::to_string(small) + "; residual starts at r^" +
               std::to_string(lowest);
      });
    }
  }
}

void hobson_equivalence(const Env& env, Check& check) {
  auto rng = env.rng("hobson-equivalence");
  const unsigned top = std::min(env.max_degree(), 5u);
  std::uniform_int_distribution<unsigned> deg(0, top);
  for (int t = 0; t < 8; ++t) {
    const Poly p = random_homogeneous(env.dim(), deg(rng), rng, 3);
    RadialPowerSum f0;
    for (unsigned j = 0; j <= 3; ++j)
      if (rng() % 2 == 0 || j == 3) f0.terms.emplace_back(j, random_rational(rng));
    const Poly a = hobson_apply(env.ctx(), p, f0);
    const Poly b = apply_operator_poly(env.ctx(), p, f0.to_poly(env.dim()));
    check.expect(a == b, [&] {
      return "p = " + format_poly(p) + "; f0(|x|) = " + format_poly(f0.to_poly(env.dim())) + "; " +
             pair_text("hobson", a, "brute force", b);
    });
  }
}

void radial_power(const Env& env, Check& check) {
  for (unsigned m = 0; m <= std::min(env.max_degree(), 3u); ++m) {
    const auto basis = h_harmonic_basis(env.ctx(), m);
    const Poly& q = basis.front();
    for (unsigned j = 0; j <= env.max_degree(); ++j) {
      const Poly a = harmonic_radial_power(env.ctx(), q, j);
      const Poly b = apply_operator_poly(env.ctx(), q, norm_squared_power(env.dim(), j));
      check.expect(a == b, [&] {
        return "q = " + format_poly(q) + "; j = " + std::to_string(j) + "; " + pair_text("formula", a, "brute force", b);
      });
    }
  }
}

void pizzetti_from_hobson_check(const Env& env, Check& check) {
  for (const auto& c : series_cases(env, "pizzetti-from-hobson", 3)) {
    const unsigned big_n = full_terms(c.f.degree(), c.m) + 1;
    const auto a = extended_pizzetti(env.ctx(), c.q, c.f, big_n);
    const auto b = pizzetti_from_hobson(env.ctx(), c.q, c.f, big_n);
    check.expect(a.coefficients == b.coefficients, [&] {
      return pair_text("q", c.q, "f", c.f) + "; direct " + describe_rationals(a.coefficients) + "; via radial powers " +
             describe_rationals(b.coefficients);
    });
  }
}

double exact_series_value(const DunklContext& ctx, const Poly& q, const Poly& f, double r) {
  const unsigned m = q.is_zero() ? 0 : static_cast<unsigned>(q.degree());
  const auto series = extended_pizzetti(ctx, q, f, full_terms(f.degree(), m));
  return series.evaluate(from_double(r)).get_d();
}

bool close(double a, double b, double tol) {
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  if (a == b) return true;
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

void bessel_form(const Env& env, Check& check) {
  for (const auto& c : series_cases(env, "bessel-form", 2))
    for (double r : {0.1, 0.5, 1.0}) {
      const double exact = exact_series_value(env.ctx(), c.q, c.f, r);
      const double numeric = bessel_form_eval(env.ctx(), c.q, c.f, r);
      check.expect(close(exact, numeric, 1e-12), [&] {
        return pair_text("q", c.q, "f", c.f) + "; r = " + double_text(r) + "; series " + double_text(exact) +
               "; operator form " + double_text(numeric);
      });
    }
}

// The 1/(lambda)_m prefactor must be distinguishable (and wrong) whenever m >= 1.
void bessel_prefactor(const Env& env, Check& check) {
  for (const auto& c : series_cases(env, "bessel-prefactor", 2)) {
    if (c.m == 0) continue;
    const double exact = exact_series_value(env.ctx(), c.q, c.f, 0.5);
    if (exact == 0.0) continue;
    const double alt = bessel_form_eval(env.ctx(), c.q, c.f, 0.5, BesselPrefactor::ShiftedLambda);
    check.expect(!close(exact, alt, 1e-6), [&] {
      return pair_text("q", c.q, "f", c.f) + "; 1/(lambda)_m form " + double_text(alt) + " agrees with series " +
             double_text(exact);
    });
  }
}

// ---- intertwine ----

void intertwiner_certification(const Env& env, Check& check) {
  const Intertwiner v(env.ctx());
  auto rng = env.rng("intertwiner-certification");
  for (unsigned n = 0; n <= env.max_degree(); ++n) {
    const Poly p = random_homogeneous(env.dim(), n, rng, 4);
    const Poly vp = v.apply(p);
    check.expect(vp.is_zero() ? p.is_zero() : (vp.is_homogeneous() && vp.degree() == static_cast<int>(n)),
                 [&] { return "V does not preserve degree: p = " + format_poly(p) + "; V p = " + format_poly(vp); });
    for (std::size_t j = 0; j < env.dim(); ++j) {
      const Poly a = dunkl_axis(env.ctx(), j, vp);
      const Poly b = v.apply(partial(p, j));
      check.expect(a == b, [&] {
        return "p = " + format_poly(p) + "; axis " + std::to_string(j + 1) + "; " + pair_text("D_j V p", a, "V d_j p", b);
      });
    }
  }
  check.expect(v.apply(Poly::constant(env.dim(), 1)) == Poly::constant(env.dim(), 1), [] { return std::string("V 1 != 1"); });
}

void intertwiner_identity(const Env& env, Check& check) {
  const DunklContext zero = make_context(env.ctx().group(), RationalVector(env.ctx().group().orbit_count(), Rational(0)));
  const Intertwiner v(zero);
  auto rng = env.rng("intertwiner-identity");
  for (int t = 0; t < 4; ++t) {
    const Poly p = random_poly(env.dim(), env.max_degree(), rng);
    const Poly vp = v.apply(p);
    check.expect(vp == p, [&] { return pair_text("p", p, "V_0 p", vp); });
  }
}

bool positive_lambda(const Env& env) { return env.ctx().lambda() > 0; }

void gegenbauer_orthogonality(const Env& env, Check& check) {
  if (!positive_lambda(env)) return;
  const Rational& lambda = env.ctx().lambda();
  for (unsigned m = 0; m <= 5; ++m)
    for (unsigned n = 0; n <= 5; ++n) {
      const UniPoly cn = gegenbauer(n, lambda);
      const Rational expected = m == n ? lambda / (static_cast<long>(n) + lambda) : Rational(0);
      const Rational a = funk_hecke_coeff(env.ctx(), m, cn);
      const Rational b = funk_hecke_coeff_by_integration(m, cn, lambda);
      check.expect(a == expected && b == expected, [&] {
        return "m = " + std::to_string(m) + "; n = " + std::to_string(n) + "; monomial rule " + to_string(a) +
               "; 1D integral " + to_string(b) + "; expected " + to_string(expected);
      });
    }
}

void funk_hecke(const Env& env, Check& check) {
  if (!positive_lambda(env)) return;
  const Intertwiner v(env.ctx());
  const unsigned top_l = std::min(env.max_degree(), 6u);
  for (unsigned m = 0; m <= 3; ++m) {
    const auto basis = h_harmonic_basis(env.ctx(), m);
    for (unsigned l = 0; l <= top_l; ++l) {
      const UniPoly phi = UniPoly::monomial(l);
      for (const auto& q : basis) {
        const auto res = funk_hecke_check(v, phi, q);
        check.expect(res.holds, [&] {
          return "phi = " + format_unipoly(phi) + "; q = " + format_poly(q) + "; a = " + to_string(res.a) + "; " +
                 pair_text("integral", res.lhs, "a q", res.rhs);
        });
      }
      // closed form of a(t^l)
      Rational expected = 0;
      if (l >= m && (l - m) % 2 == 0) {
        const unsigned n = (l - m) / 2;
        expected = Rational(factorial(l)) / (pow2(l) * Rational(factorial(n)) * pochhammer(env.ctx().lambda() + 1, m + n));
      }
      const Rational a = funk_hecke_coeff(env.ctx(), m, phi);
      check.expect(a == expected, [&] {
        return "a_m(t^" + std::to_string(l) + ") with m = " + std::to_string(m) + ": " + to_string(a) + " vs " + to_string(expected);
      });
    }
  }
}

void funk_hecke_linearity(const Env& env, Check& check) {
  if (!positive_lambda(env)) return;
  const Intertwiner v(env.ctx());
  auto rng = env.rng("funk-hecke-linearity");
  const unsigned top_l = std::min(env.max_degree(), 6u);
  for (unsigned m = 0; m <= 2; ++m) {
    const auto basis = h_harmonic_basis(env.ctx(), m);
    const Poly& q = basis[rng() % basis.size()];
    const UniPoly a = UniPoly::monomial(rng() % (top_l + 1), random_rational(rng));
    const UniPoly b = UniPoly::monomial(rng() % (top_l + 1), random_rational(rng));
    const Rational s = random_rational(rng);
    const UniPoly combo = a + s * b;
    const auto ra = funk_hecke_check(v, a, q);
    const auto rb = funk_hecke_check(v, b, q);
    const auto rc = funk_hecke_check(v, combo, q);
    const Poly expected = ra.lhs + s * rb.lhs;
    check.expect(rc.a == ra.a + s * rb.a && rc.lhs == expected, [&] {
      return "phi = " + format_unipoly(combo) + "; q = " + format_poly(q) + "; " + pair_text("integral", rc.lhs, "combination", expected);
    });
  }
}

void reproducing(const Env& env, Check& check) {
  if (!positive_lambda(env)) return;
  const Intertwiner v(env.ctx());
  const unsigned top = std::min(env.max_degree(), 3u);
  for (unsigned m = 0; m <= top; ++m) {
    const auto basis = h_harmonic_basis(env.ctx(), m);
    for (unsigned n = 0; n <= top; ++n)
      for (const auto& q : basis)
        check.expect(reproducing_check(v, n, q), [&] {
          return "n = " + std::to_string(n) + "; q = " + format_poly(q) + "; integral = " +
                 format_poly(sphere_canonical_form(env.ctx(), integrate_y(env.ctx(), reproducing_kernel(v, n), q)));
        });
  }
}

// ---- oracle ----

void dirichlet(const Env& env, Check& check) {
  if (env.ctx().group().family != GroupFamily::Z2) return;
  for (unsigned n = 0; n <= env.max_degree(); ++n)
    for (const auto& mono : monomials_of_degree(env.dim(), n)) {
      const Poly p = Poly::term(mono, 1);
      const Rational a = sphere_integrate(env.ctx(), p);
      const Rational b = dirichlet_integrate(env.ctx(), p);
      check.expect(a == b, [&] { return "p = " + format_poly(p) + "; integral = " + to_string(a) + "; Dirichlet = " + to_string(b); });
    }
}

void monte_carlo(const Env& env, Check& check) {
  auto rng = env.rng("monte-carlo");
  std::vector<Poly> corpus;
  for (int t = 0; t < 3; ++t) corpus.push_back(random_poly(env.dim(), std::min(env.max_degree(), 4u), rng, 3));
  const auto basis = h_harmonic_basis(env.ctx(), 2);
  corpus.push_back(basis.front() * basis.back());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Poly& p = corpus[i];
    const double exact = sphere_integrate(env.ctx(), p).get_d();
    const auto est = mc_sphere_integral(env.ctx(), p, env.options.seed + i, env.options.mc_samples);
    check.expect(std::abs(exact - est.mean) <= 4.0 * est.std_error + 1e-12, [&] {
      return "p = " + format_poly(p) + "; exact = " + double_text(exact) + "; mc mean = " + double_text(est.mean) +
             " +- " + double_text(est.std_error);
    });
  }
}

void bessel_remainder(const Env& env, Check& check) {
  for (unsigned m = 0; m <= 3; ++m) {
    const double alpha = env.ctx().lambda().get_d() + m;
    for (double z : {0.5, 1.0, 2.0, 5.0}) {
      const double q = z * z / 4.0;
      const double full = bessel_phi(alpha, z);
      for (unsigned k = static_cast<unsigned>(q) + 2; k < static_cast<unsigned>(q) + 8; ++k) {
        // |term_k| bounds the tail once the terms decrease
        double term = 1.0;
        for (unsigned n = 1; n <= k; ++n) term *= q / (n * (alpha + n));
        const double partial = bessel_phi_partial(alpha, z, k);
        check.expect(std::abs(full - partial) <= term * (1 + 1e-9) + 1e-15, [&] {
          return "alpha = " + double_text(alpha) + "; z = " + double_text(z) + "; terms = " + std::to_string(k) +
                 "; remainder " + double_text(std::abs(full - partial)) + " > bound " + double_text(term);
        });
      }
    }
  }
}

struct NamedCheck {
  const char* name;
  CheckFn fn;
  bool needs_zero_kappa = false;
};

const std::vector<NamedCheck>& catalog() {
  static const std::vector<NamedCheck> checks = {
      {"polyring.ring-laws", ring_laws},
      {"polyring.homogeneous-parts", homogeneous_parts_sum},
      {"polyring.parse-format", parse_format},
      {"polyring.divided-difference", divided_difference_exact},
      {"reflection.roots-permuted", roots_permuted},
      {"reflection.kappa-orbit-constant", kappa_orbit_constant},
      {"reflection.rescaling-invariance", rescaling_invariance},
      {"dunkl.commutativity", commutativity},
      {"dunkl.pairing-symmetry", pairing_symmetry},
      {"dunkl.degree-orthogonality", degree_orthogonality},
      {"dunkl.positive-definite", positive_definite},
      {"dunkl.laplacian-consistency", laplacian_consistency},
      {"dunkl.kappa-zero-reduction", kappa_zero_reduction, true},
      {"dunkl.serial-reference", serial_reference},
      {"harmonic.reconstruction", reconstruction},
      {"harmonic.decomposition-orthogonality", decomposition_orthogonality},
      {"harmonic.proj-idempotence", proj_idempotence},
      {"harmonic.basis-dimension", basis_dimension},
      {"harmonic.orthogonality-vs-sphere", orthogonality_vs_sphere},
      {"spherical.quadrature-consistency", quadrature_consistency},
      {"spherical.pizzetti-exactness", pizzetti_exactness},
      {"spherical.pizzetti-truncation", pizzetti_truncation},
      {"spherical.hobson-equivalence", hobson_equivalence},
      {"spherical.radial-power", radial_power},
      {"spherical.pizzetti-from-hobson", pizzetti_from_hobson_check},
      {"spherical.bessel-form", bessel_form},
      {"spherical.bessel-prefactor", bessel_prefactor},
      {"intertwine.certification", intertwiner_certification},
      {"intertwine.kappa-zero-identity", intertwiner_identity, true},
      {"intertwine.gegenbauer-orthogonality", gegenbauer_orthogonality},
      {"intertwine.funk-hecke", funk_hecke},
      {"intertwine.funk-hecke-linearity", funk_hecke_linearity},
      {"intertwine.reproducing", reproducing},
      {"oracle.dirichlet", dirichlet},
      {"oracle.monte-carlo", monte_carlo},
      {"oracle.bessel-remainder", bessel_remainder},
  };
  return checks;
}

}  // namespace

std::string kappa_label(const DunklContext& ctx) { return describe_vector(ctx.roots().kappa_by_orbit()); }

std::vector<CorpusEntry> default_corpus(const std::vector<GroupFamily>& families) {
  struct Seed {
    GroupFamily family;
    std::size_t dim;
    RationalVector kappa;
  };
  const std::vector<Seed> seeds = {
      {GroupFamily::Z2, 2, kappas({{1, 2}, {1, 2}})},
      {GroupFamily::Z2, 3, kappas({{1, 1}, {1, 2}, {0, 1}})},
      {GroupFamily::A, 3, kappas({{1, 1}})},
      {GroupFamily::B, 2, kappas({{1, 2}, {3, 2}})},
  };
  std::vector<CorpusEntry> out;
  for (const auto& s : seeds) {
    if (!families.empty() && std::find(families.begin(), families.end(), s.family) == families.end()) continue;
    for (bool zero : {false, true}) {
      DunklContext ctx = make_context(s.family, s.dim, zero ? RationalVector(s.kappa.size(), Rational(0)) : s.kappa);
      std::string label = ctx.group().name() + " kappa=" + kappa_label(ctx);
      out.push_back({std::move(label), std::move(ctx)});
    }
  }
  return out;
}

std::vector<GroupFamily> parse_families(std::string_view text) {
  std::vector<GroupFamily> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(start, end - start);
    GroupFamily f;
    if (item == "z2")
      f = GroupFamily::Z2;
    else if (item == "a")
      f = GroupFamily::A;
    else if (item == "b")
      f = GroupFamily::B;
    else if (item == "d")
      f = GroupFamily::D;
    else
      throw std::invalid_argument("unknown family '" + std::string(item) + "' (expected z2, a, b or d)");
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    start = end + 1;
  }
  return out;
}

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

std::size_t VerifyReport::failed() const { return checks.size() - passed(); }

std::vector<std::string> VerifyReport::check_groups() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (std::find(out.begin(), out.end(), c.name) == out.end()) out.push_back(c.name);
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.max_degree < 2) throw std::invalid_argument("verify: max_degree must be at least 2");
  if (options.max_degree > 8) throw std::invalid_argument("verify: max_degree above 8 is not supported");
  if (options.mc_samples == 0) throw std::invalid_argument("verify: at least one Monte-Carlo sample is required");
  const auto corpus = default_corpus(options.families);
  VerifyReport report;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Env env{corpus[i], options, i};
    for (const auto& named : catalog()) {
      if (named.needs_zero_kappa && !env.ctx().kappa_is_zero()) continue;
      Check check(named.name, corpus[i], degrees_up_to(options.max_degree));
      try {
        named.fn(env, check);
      } catch (const std::exception& e) {
        check.fail(std::string("exception: ") + e.what());
      }
      auto result = check.result();
      if (result.cases > 0 || !result.passed) report.checks.push_back(std::move(result));
    }
  }
  return report;
}

}  // namespace dunkl
