#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "tuttecoh/integer.hpp"

namespace tuttecoh {

struct MatrixEntry {
  int row = 0;
  int col = 0;
  Integer value;

  bool operator==(const MatrixEntry&) const = default;
};

/// Integer matrix in coordinate form. Entries are kept sorted row-major
/// with no duplicates and no zeros, so structural equality is equality.
/// A matrix acts on column vectors: rows index the target basis.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols);

  /// Sums duplicate coordinates and drops zeros.
  static SparseIntMatrix from_entries(int rows, int cols, std::vector<MatrixEntry> entries);
  static SparseIntMatrix identity(int n);
  static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Integer at(int row, int col) const;
  std::vector<std::vector<Integer>> to_dense() const;
  SparseIntMatrix transpose() const;
  std::vector<Integer> apply(std::span<const Integer> v) const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator-(const SparseIntMatrix& a);

  bool operator==(const SparseIntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

/// Assembles a block matrix. `blocks[r][c]` may be null for a zero block;
/// `row_sizes` and `col_sizes` fix the block dimensions.
SparseIntMatrix block_matrix(const std::vector<std::vector<const SparseIntMatrix*>>& blocks,
                             const std::vector<int>& row_sizes, const std::vector<int>& col_sizes);

std::ostream& operator<<(std::ostream& os, const SparseIntMatrix& m);

}  // namespace tuttecoh
