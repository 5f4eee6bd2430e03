#include "dunkl/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dunkl {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t dimension) : dim_(static_cast<std::uint8_t>(dimension)) {
  if (dimension == 0 || dimension > kMaxVariables)
    throw std::invalid_argument("monomial dimension must be in 1.." + std::to_string(kMaxVariables));
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::unit(std::size_t dimension, std::size_t axis) {
  Monomial m(dimension);
  m.set(axis, 1);
  return m;
}

void Monomial::set(std::size_t axis, unsigned exponent) {
  if (axis >= dim_) throw std::out_of_range("monomial axis out of range");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[axis] + exponent);
  exps_[axis] = static_cast<std::uint16_t>(exponent);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < dim_; ++i) out.exps_[i] = static_cast<std::uint16_t>(exps_[i] + other.exps_[i]);
  out.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return out;
}

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const std::size_t n = std::min(a.dimension(), b.dimension());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.dimension() < b.dimension();
}

// -------------------------------------------------------------------- Poly

Poly::Poly(std::size_t dimension) : dim_(dimension) {
  if (dimension == 0 || dimension > kMaxVariables)
    throw std::invalid_argument("polynomial dimension must be in 1.." + std::to_string(kMaxVariables));
}

Poly Poly::constant(std::size_t dimension, const Rational& c) {
  Poly p(dimension);
  p.add_term(Monomial(dimension), c);
  return p;
}

Poly Poly::variable(std::size_t dimension, std::size_t axis) {
  if (axis >= dimension) throw std::out_of_range("variable index out of range");
  Poly p(dimension);
  p.add_term(Monomial::unit(dimension, axis), Rational(1));
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.dimension());
  p.add_term(m, c);
  return p;
}

int Poly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

int Poly::low_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

bool Poly::is_homogeneous() const { return degree() == low_degree(); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const {
  if (terms_.empty()) return 0;
  return coefficient(Monomial(dim_));
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.dimension() != dim_) throw std::invalid_argument("monomial dimension mismatch");
  if (dunkl::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (dunkl::is_zero(it->second)) terms_.erase(it);
  }
}

void Poly::require_same_dimension(const Poly& other) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("polynomial dimension mismatch: " + std::to_string(dim_) + " vs " +
                                std::to_string(other.dim_));
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (dunkl::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_dimension(b);
  Poly out(a.dim_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

// ------------------------------------------------------------- operations

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Rational& c, const Poly& p) { return c * p; }

Poly power(const Poly& p, unsigned k) {
  Poly out = Poly::constant(p.dimension(), 1);
  Poly base = p;
  while (k > 0) {
    if (k & 1U) out = out * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return out;
}

Poly partial(const Poly& p, std::size_t axis) {
  if (axis >= p.dimension()) throw std::out_of_range("partial: axis out of range");
  Poly out(p.dimension());
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[axis];
    if (e == 0) continue;
    Monomial lowered = m;
    lowered.set(axis, e - 1);
    out.add_term(lowered, c * e);
  }
  return out;
}

Poly directional_derivative(const Poly& p, std::span<const Rational> xi) {
  if (xi.size() != p.dimension()) throw std::invalid_argument("direction length mismatch");
  Poly out(p.dimension());
  for (std::size_t j = 0; j < xi.size(); ++j)
    if (!is_zero(xi[j])) out += xi[j] * partial(p, j);
  return out;
}

Rational eval_rational(const Poly& p, std::span<const Rational> x) {
  if (x.size() != p.dimension()) throw std::invalid_argument("evaluation point length mismatch");
  Rational total = 0;
  Rational value;
  Rational pw;
  for (const auto& [m, c] : p.terms()) {
    value = c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (m[i] == 0) continue;
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(x[i].get_mpq_t()), m[i]);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(x[i].get_mpq_t()), m[i]);
      value *= pw;
    }
    total += value;
  }
  return total;
}

double eval_float(const Poly& p, std::span<const double> x) {
  if (x.size() != p.dimension()) throw std::invalid_argument("evaluation point length mismatch");
  double total = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double value = c.get_d();
    for (std::size_t i = 0; i < x.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) value *= x[i];
    total += value;
  }
  return total;
}

namespace {

void require_square(const RationalMatrix& m, std::size_t dimension) {
  if (m.size() != dimension) throw std::invalid_argument("substitution matrix has wrong shape");
  for (const auto& row : m)
    if (row.size() != dimension) throw std::invalid_argument("substitution matrix has wrong shape");
}

// A matrix with at most one nonzero entry per row maps monomials to monomials.
bool is_monomial_matrix(const RationalMatrix& m) {
  for (const auto& row : m)
    if (std::count_if(row.begin(), row.end(), [](const Rational& v) { return !is_zero(v); }) > 1) return false;
  return true;
}

Poly substitute_monomial_matrix(const Poly& p, const RationalMatrix& m) {
  const std::size_t d = p.dimension();
  std::vector<std::size_t> column(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!is_zero(m[i][j])) column[i] = j;

  Poly out(d);
  Rational scalar;
  Rational pw;
  for (const auto& [mono, c] : p.terms()) {
    Monomial image(d);
    scalar = c;
    bool vanishes = false;
    for (std::size_t i = 0; i < d && !vanishes; ++i) {
      const unsigned e = mono[i];
      if (e == 0) continue;
      if (column[i] == d) {
        vanishes = true;
        break;
      }
      image.set(column[i], image[column[i]] + e);
      const Rational& entry = m[i][column[i]];
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(entry.get_mpq_t()), e);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(entry.get_mpq_t()), e);
      scalar *= pw;
    }
    if (!vanishes) out.add_term(image, scalar);
  }
  return out;
}

}  // namespace

Poly substitute_linear(const Poly& p, const RationalMatrix& m) {
  const std::size_t d = p.dimension();
  require_square(m, d);
  if (is_monomial_matrix(m)) return substitute_monomial_matrix(p, m);

  std::vector<Poly> rows;
  rows.reserve(d);
  for (std::size_t i = 0; i < d; ++i) rows.push_back(linear_form(m[i]));
  // powers[i][e] = ((Mx)_i)^e, filled on demand
  std::vector<std::vector<Poly>> powers(d, std::vector<Poly>{Poly::constant(d, 1)});
  auto row_power = [&](std::size_t i, unsigned e) -> const Poly& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * rows[i]);
    return powers[i][e];
  };

  Poly out(d);
  for (const auto& [mono, c] : p.terms()) {
    Poly image = Poly::constant(d, c);
    for (std::size_t i = 0; i < d; ++i)
      if (mono[i] > 0) image = image * row_power(i, mono[i]);
    out += image;
  }
  return out;
}

Poly linear_form(std::span<const Rational> a) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.add_term(Monomial::unit(a.size(), i), a[i]);
  return out;
}

Poly divide_by_linear_form(const Poly& p, std::span<const Rational> a) {
  const std::size_t d = p.dimension();
  if (a.size() != d) throw std::invalid_argument("linear form length mismatch");
  const auto pivot_it = std::find_if(a.begin(), a.end(), [](const Rational& v) { return !is_zero(v); });
  if (pivot_it == a.end()) throw std::invalid_argument("division by the zero linear form");
  const auto k = static_cast<std::size_t>(pivot_it - a.begin());

  // Synthetic division in x_k: write p = sum_e C_e x_k^e with C_e free of x_k,
  // then peel off the top power against a_k x_k + rest.
  std::map<unsigned, Poly, std::greater<>> slices;
  for (const auto& [m, c] : p.terms()) {
    Monomial stripped = m;
    stripped.set(k, 0);
    auto [it, inserted] = slices.try_emplace(m[k], d);
    it->second.add_term(stripped, c);
  }
  RationalVector rest_coeffs(a.begin(), a.end());
  rest_coeffs[k] = 0;
  const Poly rest = linear_form(rest_coeffs);
  const Rational inv_pivot = 1 / a[k];

  Poly quotient(d);
  while (!slices.empty()) {
    auto top = slices.begin();
    const unsigned e = top->first;
    Poly slice = std::move(top->second);
    slices.erase(top);
    if (slice.is_zero()) continue;
    if (e == 0) throw std::logic_error("divided difference left a nonzero remainder");
    slice *= inv_pivot;
    for (const auto& [m, c] : slice.terms()) {
      Monomial lifted = m;
      lifted.set(k, e - 1);
      quotient.add_term(lifted, c);
    }
    auto [it, inserted] = slices.try_emplace(e - 1, d);
    it->second -= slice * rest;
  }
  return quotient;
}

RationalMatrix reflection_matrix_for(std::span<const Rational> a) {
  const std::size_t d = a.size();
  Rational norm2 = 0;
  for (const auto& v : a) norm2 += v * v;
  if (is_zero(norm2)) throw std::invalid_argument("reflection in the zero vector");
  RationalMatrix r(d, RationalVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r[i][j] = (i == j ? Rational(1) : Rational(0)) - 2 * a[i] * a[j] / norm2;
  return r;
}

Poly divided_difference(const Poly& p, std::span<const Rational> a) {
  if (a.size() != p.dimension()) throw std::invalid_argument("root length mismatch");
  const Poly numerator = p - substitute_linear(p, reflection_matrix_for(a));
  return divide_by_linear_form(numerator, a);
}

std::vector<std::pair<int, Poly>> homogeneous_parts(const Poly& p) {
  std::vector<std::pair<int, Poly>> parts;
  // terms are ordered by decreasing degree; walk backwards for increasing order
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int deg = static_cast<int>(it->first.degree());
    if (parts.empty() || parts.back().first != deg) parts.emplace_back(deg, Poly(p.dimension()));
    parts.back().second.add_term(it->first, it->second);
  }
  return parts;
}

Poly homogeneous_part(const Poly& p, int degree) {
  Poly out(p.dimension());
  for (const auto& [m, c] : p.terms())
    if (static_cast<int>(m.degree()) == degree) out.add_term(m, c);
  return out;
}

Poly norm_squared_power(std::size_t dimension, unsigned k) {
  Poly r2(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    Monomial m(dimension);
    m.set(i, 2);
    r2.add_term(m, 1);
  }
  return power(r2, k);
}

namespace {

void fill_monomials(Monomial& current, std::size_t axis, unsigned remaining, std::vector<Monomial>& out) {
  const std::size_t d = current.dimension();
  if (axis + 1 == d) {
    current.set(axis, remaining);
    out.push_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current.set(axis, e);
    fill_monomials(current, axis + 1, remaining - e, out);
  }
  current.set(axis, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t dimension, unsigned n) {
  std::vector<Monomial> out;
  Monomial current(dimension);
  fill_monomials(current, 0, n, out);
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t dimension) : text_(text), dim_(dimension) {}

  Poly parse() {
    Poly out(dim_);
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      Poly t = parse_term();
      if (sign < 0) t = -t;
      out += t;
      first = false;
      skip_space();
      if (at_end()) break;
    }
    return out;
  }

 private:
  Poly parse_term() {
    Rational coeff = 1;
    Monomial mono(dim_);
    while (true) {
      skip_space();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (c == 'x') {
        const auto [axis, exponent] = parse_variable();
        mono.set(axis, mono[axis] + exponent);
      } else {
        throw ParseError(at_end() ? "unexpected end of input" : std::string("unexpected character '") + c + "'",
                         pos_);
      }
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    return Poly::term(mono, coeff);
  }

  Rational parse_number() {
    const std::string num = digits();
    skip_space();
    if (peek() != '/') return Rational(Integer(num, 10));
    ++pos_;
    skip_space();
    const std::size_t den_pos = pos_;
    const std::string den = digits();
    Integer den_value(den, 10);
    if (den_value == 0) throw ParseError("zero denominator", den_pos);
    Rational r(Integer(num, 10), den_value);
    r.canonicalize();
    return r;
  }

  std::pair<std::size_t, unsigned> parse_variable() {
    const std::size_t var_pos = pos_;
    ++pos_;  // 'x'
    const std::string index_text = digits();
    const unsigned long index = std::stoul(index_text);
    if (index < 1 || index > dim_)
      throw ParseError("variable x" + index_text + " outside dimension " + std::to_string(dim_), var_pos);
    unsigned exponent = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t exp_pos = pos_;
      const unsigned long e = std::stoul(digits());
      if (e < 1 || e > 1000) throw ParseError("exponent must be in 1..1000", exp_pos);
      exponent = static_cast<unsigned>(e);
    }
    return {index - 1, exponent};
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    if (pos_ - start > 4096) throw ParseError("numeric literal too long", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t dimension) { return PolyParser(text, dimension).parse(); }

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const Rational magnitude = abs(c);
    std::vector<std::string> factors;
    if (m.degree() == 0 || magnitude != 1) factors.push_back(to_string(magnitude));
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      if (m[i] == 0) continue;
      std::string v = "x" + std::to_string(i + 1);
      if (m[i] > 1) v += "^" + std::to_string(m[i]);
      factors.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

}  // namespace dunkl
