#pragma once

#include <vector>

#include "kcut/homology.hpp"

namespace kcut {

// Rank over Q by fraction-free integer elimination (exact, big-integer
// internals; no floating point anywhere).
long long matrix_rank_rational(const BoundaryMatrix& m);

struct DiagonalForm {
  long long rank = 0;
  // Diagonal entries > 1 after reduction to a divisibility chain.
  std::vector<long long> invariant_factors;
};

// Integer diagonalization (Smith normal form restricted to what homology
// needs). Independent of matrix_rank_rational by construction.
DiagonalForm integer_diagonal_form(const BoundaryMatrix& m);

}  // namespace kcut
