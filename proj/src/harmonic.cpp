#include "dunkl/harmonic.hpp"

#include "dunkl/linalg.hpp"
#include "dunkl/operators.hpp"

#include <stdexcept>

namespace dunkl {

namespace {

void require_homogeneous(const Poly& p, unsigned n, const char* where) {
  if (p.is_zero()) return;
  if (!p.is_homogeneous() || p.degree() != static_cast<int>(n))
    throw std::invalid_argument(std::string(where) + ": expected a homogeneous polynomial of degree " +
                                std::to_string(n));
}

}  // namespace

Poly HarmonicDecomposition::reconstruct() const {
  if (components.empty()) throw std::logic_error("empty decomposition");
  const std::size_t d = components.front().poly.dimension();
  Poly out(d);
  for (const auto& c : components) out += norm_squared_power(d, c.index) * c.poly;
  return out;
}

Poly proj(const DunklContext& ctx, unsigned n, const Poly& p) {
  require_homogeneous(p, n, "proj");
  const std::size_t d = ctx.dimension();
  const Rational shift = -ctx.lambda() - static_cast<long>(n) + 1;
  Poly out = p;
  Poly lap = p;
  for (unsigned j = 1; j <= n / 2; ++j) {
    lap = laplacian(ctx, lap);
    if (lap.is_zero()) break;
    const Rational denom = Rational(pow2(2 * j)) * Rational(factorial(j)) * pochhammer(shift, j);
    out += (1 / denom) * (norm_squared_power(d, j) * lap);
  }
  return out;
}

HarmonicDecomposition canonical_decompose(const DunklContext& ctx, const Poly& p) {
  return canonical_decompose_with(ctx, p, proj);
}

HarmonicDecomposition canonical_decompose_with(const DunklContext& ctx, const Poly& p, const Projector& projector) {
  if (p.dimension() != ctx.dimension()) throw std::invalid_argument("decompose: dimension mismatch");
  if (!p.is_zero() && !p.is_homogeneous())
    throw std::invalid_argument("decompose: input must be homogeneous; split it with homogeneous_parts first");
  const unsigned n = p.is_zero() ? 0 : static_cast<unsigned>(p.degree());

  HarmonicDecomposition out;
  out.degree = n;
  Poly lap = p;
  for (unsigned i = 0; i <= n / 2; ++i) {
    if (i > 0) lap = laplacian(ctx, lap);
    const unsigned m = n - 2 * i;
    const Rational denom =
        Rational(pow2(2 * i)) * Rational(factorial(i)) * pochhammer(ctx.lambda() + 1 + static_cast<long>(m), i);
    out.components.push_back({i, (1 / denom) * projector(ctx, m, lap)});
  }
  return out;
}

bool is_h_harmonic(const DunklContext& ctx, const Poly& p) { return laplacian(ctx, p).is_zero(); }

std::size_t harmonic_dimension(std::size_t d, unsigned n) {
  const auto all = binomial(static_cast<unsigned>(n + d - 1), static_cast<unsigned>(d - 1));
  const auto lower = n < 2 ? Integer(0) : binomial(static_cast<unsigned>(n + d - 3), static_cast<unsigned>(d - 1));
  return static_cast<Integer>(all - lower).get_ui();
}

std::vector<Poly> h_harmonic_basis(const DunklContext& ctx, unsigned n) {
  const std::size_t d = ctx.dimension();
  const auto cols = monomials_of_degree(d, n);
  std::vector<Poly> basis;
  if (n < 2) {
    for (const auto& m : cols) basis.push_back(Poly::term(m, 1));
    return basis;
  }
  const auto rows = monomials_of_degree(d, n - 2);

  std::vector<RationalVector> images(cols.size());
  const auto count = static_cast<long>(cols.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    const auto c = static_cast<std::size_t>(k);
    images[c] = coordinates(laplacian(ctx, Poly::term(cols[c], 1)), rows);
  }

  RationalMatrix matrix(rows.size(), RationalVector(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows.size(); ++r) matrix[r][c] = images[c][r];

  for (const auto& v : nullspace(matrix, cols.size())) basis.push_back(from_coordinates(v, cols));
  return basis;
}

Rational orthogonality_rhs(const DunklContext& ctx, const Poly& p, const Poly& q) {
  for (const Poly* f : {&p, &q}) {
    if (f->is_zero()) return 0;
    if (!f->is_homogeneous() || !is_h_harmonic(ctx, *f))
      throw std::invalid_argument("orthogonality_rhs: inputs must be homogeneous h-harmonic polynomials");
  }
  if (p.degree() != q.degree()) return 0;
  const auto m = static_cast<unsigned>(q.degree());
  return pairing(ctx, q, p) / (pow2(m) * pochhammer(ctx.lambda() + 1, m));
}

Poly sphere_canonical_form(const DunklContext& ctx, const Poly& p) {
  Poly out(p.dimension());
  for (const auto& [deg, part] : homogeneous_parts(p))
    for (const auto& component : canonical_decompose(ctx, part).components) out += component.poly;
  return out;
}

}  // namespace dunkl
