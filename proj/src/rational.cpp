#include "dunkl/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace dunkl {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  std::string_view s = compact;
  const auto slash = s.find('/');
  const auto num_text = s.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) || den_text[0] == '-')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num_text), den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  Rational r;
  r = x;  // mpq_set_d is exact
  return r;
}

Rational pochhammer(const Rational& a, unsigned n) {
  Rational acc = 1;
  Rational term = a;
  for (unsigned i = 0; i < n; ++i) {
    acc *= term;
    term += 1;
  }
  return acc;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational pow2(unsigned k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
  return Rational(p);
}

}  // namespace dunkl
