#include "dunkl/oracle.hpp"
#include "dunkl/reference.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace dunkl {

namespace {

// Flattened polynomial and weight for the sampling loop.
struct Integrand {
  std::size_t dim = 0;
  std::vector<double> coeffs;
  std::vector<unsigned> exponents;  // coeffs.size() * dim
  std::vector<double> roots;        // roots.size() / dim roots with kappa > 0
  std::vector<double> twice_kappa;

  Integrand(const DunklContext& ctx, const Poly& p) : dim(ctx.dimension()) {
    if (p.dimension() != dim) throw std::invalid_argument("mc: dimension mismatch");
    for (const auto& [m, c] : p.terms()) {
      coeffs.push_back(c.get_d());
      for (std::size_t i = 0; i < dim; ++i) exponents.push_back(m[i]);
    }
    const auto& rs = ctx.roots();
    for (std::size_t r = 0; r < rs.size(); ++r) {
      if (is_zero(rs.kappa(r))) continue;
      for (std::size_t i = 0; i < dim; ++i) roots.push_back(rs.root(r)[i].get_d());
      twice_kappa.push_back(2.0 * rs.kappa(r).get_d());
    }
  }

  double poly(const double* y) const {
    double total = 0.0;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      double v = coeffs[t];
      const unsigned* e = &exponents[t * dim];
      for (std::size_t i = 0; i < dim; ++i)
        for (unsigned k = 0; k < e[i]; ++k) v *= y[i];
      total += v;
    }
    return total;
  }

  double weight(const double* y) const {
    double w = 1.0;
    for (std::size_t r = 0; r < twice_kappa.size(); ++r) {
      double s = 0.0;
      for (std::size_t i = 0; i < dim; ++i) s += roots[r * dim + i] * y[i];
      w *= std::pow(std::abs(s), twice_kappa[r]);
    }
    return w;
  }
};

struct ChunkSums {
  double w = 0, wp = 0, w2 = 0, w2p = 0, w2p2 = 0;
  std::uint64_t n = 0;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

ChunkSums run_chunk(const Integrand& f, std::uint64_t seed, std::uint64_t chunk, std::uint64_t count) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(chunk)));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> y(f.dim);
  ChunkSums s;
  for (std::uint64_t k = 0; k < count; ++k) {
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (auto& v : y) {
        v = normal(rng);
        norm2 += v * v;
      }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& v : y) v *= inv;
    const double w = f.weight(y.data());
    const double p = f.poly(y.data());
    s.w += w;
    s.wp += w * p;
    s.w2 += w * w;
    s.w2p += w * w * p;
    s.w2p2 += w * w * p * p;
    ++s.n;
  }
  return s;
}

McEstimate finish(const std::vector<ChunkSums>& chunks, std::uint64_t seed, std::uint64_t samples) {
  ChunkSums total;
  for (const auto& c : chunks) {
    total.w += c.w;
    total.wp += c.wp;
    total.w2 += c.w2;
    total.w2p += c.w2p;
    total.w2p2 += c.w2p2;
    total.n += c.n;
  }
  McEstimate out;
  out.seed = seed;
  out.samples = samples;
  out.mean = total.wp / total.w;
  if (samples > 1) {
    // linearized ratio estimator: Z_i = w_i (p_i - mean) / mean(w)
    const double n = static_cast<double>(samples);
    const double w_bar = total.w / n;
    const double r = out.mean;
    const double ss = std::max(0.0, total.w2p2 - 2.0 * r * total.w2p + r * r * total.w2);
    const double var = ss / (w_bar * w_bar) / (n - 1.0);
    out.std_error = std::sqrt(var / n);
  }
  return out;
}

std::uint64_t chunk_count(std::uint64_t samples) { return (samples + kMcChunkSize - 1) / kMcChunkSize; }

std::uint64_t chunk_length(std::uint64_t samples, std::uint64_t chunk) {
  return std::min(kMcChunkSize, samples - chunk * kMcChunkSize);
}

}  // namespace

McEstimate mc_sphere_integral(const DunklContext& ctx, const Poly& p, std::uint64_t seed, std::uint64_t samples) {
  if (samples == 0) throw std::invalid_argument("mc: at least one sample is required");
  const Integrand f(ctx, p);
  const std::uint64_t chunks = chunk_count(samples);
  std::vector<ChunkSums> sums(chunks);
  const auto count = static_cast<long long>(chunks);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < count; ++c) {
    const auto chunk = static_cast<std::uint64_t>(c);
    sums[chunk] = run_chunk(f, seed, chunk, chunk_length(samples, chunk));
  }
  return finish(sums, seed, samples);
}

namespace reference {

McEstimate mc_sphere_integral_serial(const DunklContext& ctx, const Poly& p, std::uint64_t seed,
                                     std::uint64_t samples) {
  if (samples == 0) throw std::invalid_argument("mc: at least one sample is required");
  const Integrand f(ctx, p);
  std::vector<ChunkSums> sums;
  for (std::uint64_t chunk = 0; chunk < chunk_count(samples); ++chunk)
    sums.push_back(run_chunk(f, seed, chunk, chunk_length(samples, chunk)));
  return finish(sums, seed, samples);
}

}  // namespace reference

Rational dirichlet_monomial(const DunklContext& ctx, std::span<const unsigned> half_exponents) {
  if (ctx.group().family != GroupFamily::Z2) throw std::invalid_argument("Dirichlet formula applies to Z2^d only");
  if (half_exponents.size() != ctx.dimension()) throw std::invalid_argument("exponent vector has wrong length");
  const Rational half(1, 2);
  Rational num = 1;
  unsigned total = 0;
  for (std::size_t i = 0; i < half_exponents.size(); ++i) {
    num *= pochhammer(ctx.roots().kappa_by_orbit()[i] + half, half_exponents[i]);
    total += half_exponents[i];
  }
  return num / pochhammer(ctx.lambda() + 1, total);
}

Rational dirichlet_integrate(const DunklContext& ctx, const Poly& p) {
  Rational total = 0;
  std::vector<unsigned> half(ctx.dimension());
  for (const auto& [m, c] : p.terms()) {
    bool even = true;
    for (std::size_t i = 0; i < half.size(); ++i) {
      if (m[i] % 2 != 0) even = false;
      half[i] = m[i] / 2;
    }
    if (even) total += c * dirichlet_monomial(ctx, half);
  }
  return total;
}

Rational gegenbauer_weight_mean(const UniPoly& g, const Rational& lambda) {
  if (lambda <= Rational(-1, 2)) throw std::domain_error("weight (1-t^2)^(lambda-1/2) is not integrable");
  const Rational half(1, 2);
  Rational total = 0;
  Rational ratio = 1;  // (1/2)_k / (lambda+1)_k
  const auto& c = g.coefficients();
  for (std::size_t k = 0; 2 * k < c.size(); ++k) {
    if (k > 0) ratio *= (half + static_cast<unsigned long>(k - 1)) / (lambda + static_cast<unsigned long>(k));
    total += c[2 * k] * ratio;
  }
  return total;
}

Rational funk_hecke_coeff_by_integration(unsigned m, const UniPoly& phi, const Rational& lambda) {
  if (lambda <= 0) throw std::domain_error("Funk-Hecke coefficient needs lambda > 0");
  const UniPoly cm = gegenbauer(m, lambda);
  // C_m(1) = (2 lambda)_m / m!
  return Rational(factorial(m)) / pochhammer(2 * lambda, m) * gegenbauer_weight_mean(phi * cm, lambda);
}

double bessel_phi_partial(double alpha, double z, unsigned terms) {
  if (alpha < -0.5) throw std::domain_error("phi_alpha needs alpha >= -1/2");
  const long double q = static_cast<long double>(z) * z / 4.0L;
  long double term = 1.0L;
  long double sum = 0.0L;
  for (unsigned n = 0; n < terms; ++n) {
    if (n > 0) term *= -q / (static_cast<long double>(n) * (alpha + n));
    sum += term;
  }
  return static_cast<double>(sum);
}

double bessel_phi(double alpha, double z) {
  if (alpha < -0.5) throw std::domain_error("phi_alpha needs alpha >= -1/2");
  // term ratio -(z/2)^2 / (n (alpha + n))
  const long double q = static_cast<long double>(z) * z / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (unsigned n = 1; n < 500; ++n) {
    term *= -q / (static_cast<long double>(n) * (alpha + n));
    sum += term;
    if (n > q && std::abs(term) <= 1e-22L * std::abs(sum)) break;
  }
  return static_cast<double>(sum);
}

}  // namespace dunkl
