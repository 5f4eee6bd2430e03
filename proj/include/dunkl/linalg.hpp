#pragma once

// Exact linear algebra over the rationals (Gauss-Jordan elimination).

#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"

#include <cstddef>
#include <vector>

namespace dunkl {

struct RowEchelon {
  RationalMatrix reduced;              // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;     // pivot column of each row
};

/// Reduced row echelon form. Pivot rows are chosen as the first row with a
/// nonzero entry in the current column, so the result is deterministic.
RowEchelon row_reduce(RationalMatrix m, std::size_t columns);

/// Basis of {v : M v = 0}, one vector per free column in increasing column order.
/// Each basis vector has a 1 in its free column and 0 in the other free columns.
std::vector<RationalVector> nullspace(const RationalMatrix& m, std::size_t columns);

/// Solves A X = B for X when A has full column rank and the system is consistent.
/// B holds one right-hand side per column. Throws std::logic_error otherwise.
RationalMatrix solve_unique(const RationalMatrix& a, const RationalMatrix& b, std::size_t columns);

/// Coefficients of p on a list of monomials; throws std::invalid_argument if p
/// has a term outside the list.
RationalVector coordinates(const Poly& p, const std::vector<Monomial>& basis);

Poly from_coordinates(const RationalVector& v, const std::vector<Monomial>& basis);

}  // namespace dunkl
