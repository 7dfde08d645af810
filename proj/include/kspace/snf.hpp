#pragma once

#include "kspace/int_matrix.hpp"

#include <vector>

namespace kspace {

struct SmithForm {
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix D;  // diagonal, same shape as the input
  IntMatrix V;  // unimodular, cols x cols
  IntMatrix U_inv;

  // Nonzero diagonal entries of D, in order; each divides the next.
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

// U * A * V == D, with D diagonal, non-negative and in divisibility order.
SmithForm snf(const IntMatrix& A);

// Invariant factors only (no transforms); cheaper for large sparse inputs.
std::vector<Integer> invariant_factors(const IntMatrix& A);

// Abelian group Z^free_rank + sum Z/torsion[i]; torsion entries are >= 2
// and form a divisibility chain.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Cokernel of a relation matrix whose columns are relations among
// `A.rows()` generators.
AbelianGroup cokernel(const IntMatrix& A);

}  // namespace kspace
