#include "dunkl/random.hpp"

#include <algorithm>

namespace dunkl {

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  long n = 0;
  while (n == 0) n = num(rng);
  return make_rational(n, den(rng));
}

Poly random_homogeneous(std::size_t dimension, unsigned degree, Rng& rng, std::size_t max_terms) {
  auto monomials = monomials_of_degree(dimension, degree);
  if (max_terms != 0 && max_terms < monomials.size()) {
    std::shuffle(monomials.begin(), monomials.end(), rng);
    std::uniform_int_distribution<std::size_t> count(1, max_terms);
    monomials.resize(count(rng));
  }
  Poly p(dimension);
  for (const auto& m : monomials) p.add_term(m, random_rational(rng));
  return p;
}

Poly random_poly(std::size_t dimension, unsigned max_degree, Rng& rng, std::size_t terms_per_degree) {
  std::bernoulli_distribution keep(0.6);
  Poly p(dimension);
  for (unsigned deg = 0; deg <= max_degree; ++deg)
    if (keep(rng) || deg == max_degree) p += random_homogeneous(dimension, deg, rng, terms_per_degree);
  return p;
}

}  // namespace dunkl
