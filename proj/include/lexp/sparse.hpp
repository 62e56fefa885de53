#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lexp/matrix.hpp"

namespace lexp {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

// Compressed sparse row matrix. Entries are kept in canonical row-major order
// with strictly increasing columns per row and no stored zeros, so two
// matrices with the same nonzeros compare equal structurally.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

  // Duplicate coordinates are summed; entries that end up exactly zero are
  // dropped. Throws ArgumentError on out-of-range coordinates.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> triplets);
  static SparseMatrix identity(std::size_t n, double value = 1.0);
  static SparseMatrix from_dense(const Matrix& dense);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return values_.size(); }

  std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
  std::span<const std::size_t> col_index() const noexcept { return col_index_; }
  std::span<const double> values() const noexcept { return values_; }

  std::span<const std::size_t> row_cols(std::size_t r) const {
    return {col_index_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  std::span<const double> row_values(std::size_t r) const {
    return {values_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }

  double at(std::size_t r, std::size_t c) const;

  std::vector<Triplet> entries() const;
  std::vector<double> row_sums() const;

  SparseMatrix transpose() const;
  Matrix to_dense() const;

  // this * other
  SparseMatrix multiply(const SparseMatrix& other) const;
  // this * dense, row accumulation through the active SIMD kernels
  Matrix multiply(const Matrix& dense) const;
  // this + alpha * other
  SparseMatrix add_scaled(const SparseMatrix& other, double alpha) const;
  // diag(left) * this * diag(right)
  SparseMatrix scale_rows_cols(std::span<const double> left, std::span<const double> right) const;

  bool is_symmetric(double tol = 0.0) const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_index_;
  std::vector<double> values_;
};

double max_abs_diff(const SparseMatrix& a, const SparseMatrix& b);

// Coordinate text: "<rows> <cols> <nnz>" then one "<r> <c> <value>" line per
// entry in canonical order. Values are printed with 17 significant digits.
void write_coordinate(std::ostream& out, const SparseMatrix& m);
SparseMatrix read_coordinate(std::istream& in);

}  // namespace lexp
