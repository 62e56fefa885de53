#include "lexp/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "lexp/error.hpp"
#include "lexp/kernels.hpp"

namespace lexp {

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets) {
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols)
      throw ArgumentError("sparse entry (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                          ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix m(rows, cols);
  m.col_index_.reserve(triplets.size());
  m.values_.reserve(triplets.size());
  std::vector<std::size_t> counts(rows, 0);
  for (std::size_t i = 0; i < triplets.size();) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < triplets.size() && triplets[j].row == triplets[i].row &&
           triplets[j].col == triplets[i].col) {
      sum += triplets[j].value;
      ++j;
    }
    if (sum != 0.0) {
      m.col_index_.push_back(triplets[i].col);
      m.values_.push_back(sum);
      ++counts[triplets[i].row];
    }
    i = j;
  }
  for (std::size_t r = 0; r < rows; ++r) m.row_ptr_[r + 1] = m.row_ptr_[r] + counts[r];
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n, double value) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, value});
  return from_triplets(n, n, std::move(t));
}

SparseMatrix SparseMatrix::from_dense(const Matrix& dense) {
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < dense.rows(); ++r)
    for (std::size_t c = 0; c < dense.cols(); ++c)
      if (dense(r, c) != 0.0) t.push_back({r, c, dense(r, c)});
  return from_triplets(dense.rows(), dense.cols(), std::move(t));
}

double SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw ArgumentError("sparse index out of range");
  const auto cols = row_cols(r);
  const auto it = std::lower_bound(cols.begin(), cols.end(), c);
  if (it == cols.end() || *it != c) return 0.0;
  return values_[row_ptr_[r] + static_cast<std::size_t>(it - cols.begin())];
}

std::vector<Triplet> SparseMatrix::entries() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      out.push_back({r, col_index_[k], values_[k]});
  return out;
}

std::vector<double> SparseMatrix::row_sums() const {
  std::vector<double> sums(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (double v : row_values(r)) sums[r] += v;
  return sums;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  std::vector<std::size_t> counts(cols_, 0);
  for (std::size_t c : col_index_) ++counts[c];
  for (std::size_t c = 0; c < cols_; ++c) t.row_ptr_[c + 1] = t.row_ptr_[c] + counts[c];
  t.col_index_.resize(nnz());
  t.values_.resize(nnz());
  std::vector<std::size_t> next(t.row_ptr_.begin(), t.row_ptr_.end() - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const std::size_t dst = next[col_index_[k]]++;
      t.col_index_[dst] = r;
      t.values_[dst] = values_[k];
    }
  }
  return t;
}

Matrix SparseMatrix::to_dense() const {
  Matrix d(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) d(r, col_index_[k]) = values_[k];
  return d;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw ArgumentError("sparse multiply: inner dimensions differ");
  // Row-by-row accumulation into a dense scratch row (Gustavson).
  std::vector<double> acc(other.cols_, 0.0);
  std::vector<char> touched(other.cols_, 0);
  std::vector<std::size_t> pattern;
  std::vector<Triplet> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    pattern.clear();
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const std::size_t mid = col_index_[k];
      const double a = values_[k];
      for (std::size_t q = other.row_ptr_[mid]; q < other.row_ptr_[mid + 1]; ++q) {
        const std::size_t c = other.col_index_[q];
        if (!touched[c]) {
          touched[c] = 1;
          pattern.push_back(c);
        }
        acc[c] += a * other.values_[q];
      }
    }
    for (std::size_t c : pattern) {
      out.push_back({r, c, acc[c]});
      acc[c] = 0.0;
      touched[c] = 0;
    }
  }
  return from_triplets(rows_, other.cols_, std::move(out));
}

Matrix SparseMatrix::multiply(const Matrix& dense) const {
  if (cols_ != dense.rows()) throw ArgumentError("sparse-dense multiply: inner dimensions differ");
  const auto& k = kernels::active();
  Matrix out(rows_, dense.cols());
  for (std::size_t r = 0; r < rows_; ++r) {
    auto dst = out.row(r);
    for (std::size_t q = row_ptr_[r]; q < row_ptr_[r + 1]; ++q)
      k.axpy(values_[q], dense.row(col_index_[q]), dst);
  }
  return out;
}

SparseMatrix SparseMatrix::add_scaled(const SparseMatrix& other, double alpha) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ArgumentError("sparse add: shapes differ");
  std::vector<Triplet> t = entries();
  for (auto e : other.entries()) t.push_back({e.row, e.col, alpha * e.value});
  return from_triplets(rows_, cols_, std::move(t));
}

SparseMatrix SparseMatrix::scale_rows_cols(std::span<const double> left,
                                           std::span<const double> right) const {
  if (left.size() != rows_ || right.size() != cols_)
    throw ArgumentError("scale_rows_cols: scaling vector sizes differ from matrix shape");
  SparseMatrix m = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
      m.values_[k] = values_[k] * (left[r] * right[col_index_[k]]);
  // Rebuild in case a scale factor zeroed an entry.
  return from_triplets(rows_, cols_, m.entries());
}

bool SparseMatrix::is_symmetric(double tol) const {
  if (rows_ != cols_) return false;
  return max_abs_diff(*this, transpose()) <= tol;
}

double max_abs_diff(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ArgumentError("max_abs_diff: shapes differ");
  double diff = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto ac = a.row_cols(r), bc = b.row_cols(r);
    const auto av = a.row_values(r), bv = b.row_values(r);
    std::size_t i = 0, j = 0;
    while (i < ac.size() || j < bc.size()) {
      double d;
      if (j == bc.size() || (i < ac.size() && ac[i] < bc[j])) {
        d = std::abs(av[i++]);
      } else if (i == ac.size() || bc[j] < ac[i]) {
        d = std::abs(bv[j++]);
      } else {
        d = std::abs(av[i++] - bv[j++]);
      }
      if (std::isnan(d)) return HUGE_VAL;
      diff = std::max(diff, d);
    }
  }
  return diff;
}

void write_coordinate(std::ostream& out, const SparseMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  const auto old_precision = out.precision(17);
  for (const auto& e : m.entries()) out << e.row << ' ' << e.col << ' ' << e.value << '\n';
  out.precision(old_precision);
}

SparseMatrix read_coordinate(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(line_no, "missing coordinate header");
  std::size_t rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream ss(line);
    if (!(ss >> rows >> cols >> nnz)) throw ParseError(line_no, "malformed coordinate header");
  }
  std::vector<Triplet> t;
  t.reserve(nnz);
  for (std::size_t i = 0; i < nnz; ++i) {
    if (!next_line()) throw ParseError(line_no, "expected " + std::to_string(nnz) + " entries");
    std::istringstream ss(line);
    Triplet e{};
    if (!(ss >> e.row >> e.col >> e.value)) throw ParseError(line_no, "malformed entry");
    if (e.row >= rows || e.col >= cols) throw ParseError(line_no, "entry outside matrix shape");
    t.push_back(e);
  }
  return SparseMatrix::from_triplets(rows, cols, std::move(t));
}

}  // namespace lexp
