#pragma once

#include <vector>

#include "tuttecoh/integer.hpp"
#include "tuttecoh/sparse_matrix.hpp"

namespace tuttecoh {

/// Nonzero invariant factors d1 | d2 | ... | dr of an integer matrix.
struct SmithForm {
  std::vector<Integer> invariant_factors;
  int rank = 0;

  /// Invariant factors greater than one, in divisibility order.
  std::vector<Integer> torsion() const;
  bool unimodular() const { return torsion().empty(); }
};

/// Exact Smith normal form by sparse elimination: pivots are chosen with the
/// smallest magnitude, ties broken towards the sparsest row and column.
SmithForm smith_normal_form(const SparseIntMatrix& m);

/// Rank over the rationals.
int matrix_rank(const SparseIntMatrix& m);

}  // namespace tuttecoh
