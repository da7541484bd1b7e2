#pragma once

#include <vector>

#include "nilfilt/abelian_group.hpp"
#include "nilfilt/integer_matrix.hpp"

namespace nilfilt {

struct SmithForm {
  IntegerMatrix S;  // diagonal, d1 | d2 | ..., nonnegative
  IntegerMatrix U;  // rows x rows, unimodular
  IntegerMatrix V;  // cols x cols, unimodular
  std::vector<BigInt> diagonal;  // nonzero diagonal entries of S
};

// Dense Smith normal form with transforms: U * A * V = S. Pivots on the
// entry of least absolute value, ties broken by lowest (row, col).
SmithForm smith_normal_form(const IntegerMatrix& a);

// Nonzero invariant factors of A (units included), as a divisibility chain.
// Sparse unit-pivot elimination first, then dense SNF on what remains.
// Runs in checked int64 and restarts in arbitrary precision on overflow.
std::vector<BigInt> invariant_factors(const IntegerMatrix& a);

std::size_t matrix_rank(const IntegerMatrix& a);

// Z^cols / rowspace(A): rows are relations among the column generators.
AbelianGroup cokernel_invariants(const IntegerMatrix& a);

// Exact determinant (fraction-free Bareiss). Square input required.
BigInt determinant(const IntegerMatrix& a);

}  // namespace nilfilt
