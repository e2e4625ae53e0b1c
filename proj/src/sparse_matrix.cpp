#include "tuttecoh/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace tuttecoh {

namespace {

bool coordinate_less(const MatrixEntry& a, const MatrixEntry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

}  // namespace

SparseIntMatrix::SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseIntMatrix SparseIntMatrix::from_entries(int rows, int cols, std::vector<MatrixEntry> entries) {
  SparseIntMatrix m(rows, cols);
  for (const auto& e : entries)
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw std::out_of_range("matrix entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                              ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
  std::sort(entries.begin(), entries.end(), coordinate_less);
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
      m.entries_.back().value += e.value;
      if (m.entries_.back().value == 0) m.entries_.pop_back();
    } else if (e.value != 0) {
      m.entries_.push_back(std::move(e));
    }
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::identity(int n) {
  SparseIntMatrix m(n, n);
  for (int k = 0; k < n; ++k) m.entries_.push_back({k, k, 1});
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Integer>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  std::vector<MatrixEntry> entries;
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged dense matrix");
    for (int j = 0; j < c; ++j)
      if (rows[i][j] != 0) entries.push_back({i, j, rows[i][j]});
  }
  return from_entries(r, c, std::move(entries));
}

Integer SparseIntMatrix::at(int row, int col) const {
  const MatrixEntry key{row, col, 0};
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), key, coordinate_less);
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_, 0));
  for (const auto& e : entries_) out[e.row][e.col] = e.value;
  return out;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return from_entries(cols_, rows_, std::move(t));
}

std::vector<Integer> SparseIntMatrix::apply(std::span<const Integer> v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Integer> out(rows_, 0);
  for (const auto& e : entries_) out[e.row] += e.value * v[e.col];
  return out;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product dimension mismatch: " + std::to_string(a.cols_) + " vs " +
                                std::to_string(b.rows_));
  // Row ranges of b for each row index.
  std::vector<std::size_t> start(b.rows_ + 1, 0);
  for (const auto& e : b.entries_) ++start[e.row + 1];
  for (int r = 0; r < b.rows_; ++r) start[r + 1] += start[r];

  std::vector<MatrixEntry> out;
  std::map<int, Integer> acc;
  std::size_t k = 0;
  while (k < a.entries_.size()) {
    const int row = a.entries_[k].row;
    acc.clear();
    for (; k < a.entries_.size() && a.entries_[k].row == row; ++k) {
      const auto& ea = a.entries_[k];
      for (std::size_t t = start[ea.col]; t < start[ea.col + 1]; ++t) acc[b.entries_[t].col] += ea.value * b.entries_[t].value;
    }
    for (auto& [col, value] : acc)
      if (value != 0) out.push_back({row, col, std::move(value)});
  }
  SparseIntMatrix m(a.rows_, b.cols_);
  m.entries_ = std::move(out);
  return m;
}

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  auto entries = a.entries_;
  entries.insert(entries.end(), b.entries_.begin(), b.entries_.end());
  return SparseIntMatrix::from_entries(a.rows_, a.cols_, std::move(entries));
}

SparseIntMatrix operator-(const SparseIntMatrix& a) {
  SparseIntMatrix m = a;
  for (auto& e : m.entries_) e.value = -e.value;
  return m;
}

SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b) { return a + (-b); }

SparseIntMatrix block_matrix(const std::vector<std::vector<const SparseIntMatrix*>>& blocks,
                             const std::vector<int>& row_sizes, const std::vector<int>& col_sizes) {
  std::vector<MatrixEntry> entries;
  int row_offset = 0;
  for (std::size_t br = 0; br < row_sizes.size(); ++br) {
    int col_offset = 0;
    for (std::size_t bc = 0; bc < col_sizes.size(); ++bc) {
      const SparseIntMatrix* m = blocks.at(br).at(bc);
      if (m) {
        if (m->rows() != row_sizes[br] || m->cols() != col_sizes[bc])
          throw std::invalid_argument("block dimension mismatch");
        for (const auto& e : m->entries()) entries.push_back({e.row + row_offset, e.col + col_offset, e.value});
      }
      col_offset += col_sizes[bc];
    }
    row_offset += row_sizes[br];
  }
  int total_cols = 0;
  for (const int c : col_sizes) total_cols += c;
  return SparseIntMatrix::from_entries(row_offset, total_cols, std::move(entries));
}

std::ostream& operator<<(std::ostream& os, const SparseIntMatrix& m) {
  os << m.rows() << 'x' << m.cols() << " [";
  for (const auto& e : m.entries()) os << " (" << e.row << ',' << e.col << ")=" << e.value;
  return os << " ]";
}

}  // namespace tuttecoh
