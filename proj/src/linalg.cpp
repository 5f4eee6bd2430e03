#include "dunkl/linalg.hpp"

#include <map>
#include <stdexcept>

namespace dunkl {

RowEchelon row_reduce(RationalMatrix m, std::size_t columns) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && is_zero(m[pivot][col])) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c)
        if (!is_zero(m[row][c])) m[r][c] -= factor * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.reduced = std::move(m);
  return out;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m, std::size_t columns) {
  for (const auto& r : m)
    if (r.size() != columns) throw std::invalid_argument("nullspace: ragged matrix");
  const RowEchelon ech = row_reduce(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(columns);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix solve_unique(const RationalMatrix& a, const RationalMatrix& b, std::size_t columns) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t rhs = b.empty() ? 0 : b.front().size();
  RationalMatrix augmented(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != columns || b[r].size() != rhs) throw std::invalid_argument("solve: ragged matrix");
    augmented[r] = a[r];
    augmented[r].insert(augmented[r].end(), b[r].begin(), b[r].end());
  }
  const RowEchelon ech = row_reduce(std::move(augmented), columns + rhs);
  std::size_t rank = 0;
  for (auto p : ech.pivots) {
    if (p >= columns) throw std::logic_error("linear system is inconsistent");
    ++rank;
  }
  if (rank != columns) throw std::logic_error("linear system is singular");

  RationalMatrix x(columns, RationalVector(rhs));
  for (std::size_t r = 0; r < columns; ++r)
    for (std::size_t k = 0; k < rhs; ++k) x[ech.pivots[r]][k] = ech.reduced[r][columns + k];
  return x;
}

RationalVector coordinates(const Poly& p, const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t, GradedLexDescending> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  RationalVector v(basis.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::invalid_argument("polynomial has a term outside the basis");
    v[it->second] = c;
  }
  return v;
}

Poly from_coordinates(const RationalVector& v, const std::vector<Monomial>& basis) {
  if (v.size() != basis.size()) throw std::invalid_argument("coordinate length mismatch");
  if (basis.empty()) throw std::invalid_argument("empty basis");
  Poly p(basis.front().dimension());
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(basis[i], v[i]);
  return p;
}

}  // namespace dunkl
