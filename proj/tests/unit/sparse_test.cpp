#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "lexp/error.hpp"
#include "lexp/random.hpp"
#include "lexp/sparse.hpp"

using namespace lexp;

namespace {

SparseMatrix random_sparse(std::size_t rows, std::size_t cols, double density, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.bernoulli(density)) t.push_back({r, c, rng.uniform(-2.0, 2.0)});
  return SparseMatrix::from_triplets(rows, cols, std::move(t));
}

Matrix random_dense(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (double& x : m.data()) x = rng.uniform(-1.0, 1.0);
  return m;
}

Matrix naive_product(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

}  // namespace

TEST(SparseMatrix, TripletsAreCanonicalized) {
  const auto m = SparseMatrix::from_triplets(2, 3, {{1, 2, 1.0}, {0, 1, 2.0}, {1, 2, 3.0}, {0, 0, 0.0},
                                                    {1, 0, 1.0}, {1, 0, -1.0}});
  EXPECT_EQ(m.nnz(), 2u);
  const auto e = m.entries();
  EXPECT_EQ(e[0].row, 0u);
  EXPECT_EQ(e[0].col, 1u);
  EXPECT_EQ(e[0].value, 2.0);
  EXPECT_EQ(e[1].row, 1u);
  EXPECT_EQ(e[1].col, 2u);
  EXPECT_EQ(e[1].value, 4.0);
  EXPECT_EQ(m.at(1, 0), 0.0);
}

TEST(SparseMatrix, RejectsOutOfRange) {
  EXPECT_THROW(SparseMatrix::from_triplets(2, 2, {{2, 0, 1.0}}), ArgumentError);
  EXPECT_THROW(SparseMatrix::from_triplets(2, 2, {{0, 2, 1.0}}), ArgumentError);
}

TEST(SparseMatrix, ProductsMatchDenseOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_sparse(7, 9, 0.3, seed);
    const auto b = random_sparse(9, 5, 0.3, seed + 100);
    const auto x = random_dense(9, 4, seed + 200);
    EXPECT_LE(max_abs_diff(a.multiply(b).to_dense(), naive_product(a.to_dense(), b.to_dense())), 1e-12);
    EXPECT_LE(max_abs_diff(a.multiply(x), naive_product(a.to_dense(), x)), 1e-12);
    EXPECT_EQ(a.transpose().transpose(), a);
  }
}

TEST(SparseMatrix, AddScaledAndScaling) {
  const auto a = random_sparse(6, 6, 0.4, 3);
  const auto zero = a.add_scaled(a, -1.0);
  EXPECT_EQ(zero.nnz(), 0u);
  const std::vector<double> l{1, 2, 3, 4, 5, 6}, r{6, 5, 4, 3, 2, 1};
  const auto s = a.scale_rows_cols(l, r);
  for (const auto& t : a.entries()) EXPECT_DOUBLE_EQ(s.at(t.row, t.col), l[t.row] * t.value * r[t.col]);
}

TEST(SparseMatrix, SymmetryCheck) {
  const auto a = random_sparse(6, 6, 0.4, 5);
  EXPECT_TRUE(a.add_scaled(a.transpose(), 1.0).is_symmetric());
  EXPECT_FALSE(SparseMatrix::from_triplets(2, 2, {{0, 1, 1.0}}).is_symmetric());
}

TEST(SparseMatrix, CoordinateRoundTrip) {
  const auto a = random_sparse(5, 8, 0.3, 11);
  std::stringstream ss;
  write_coordinate(ss, a);
  EXPECT_EQ(read_coordinate(ss), a);
}

TEST(SparseMatrix, MaxAbsDiffSeesNan) {
  const auto a = SparseMatrix::from_triplets(1, 1, {{0, 0, std::nan("")}});
  const auto b = SparseMatrix::from_triplets(1, 1, {{0, 0, 1.0}});
  EXPECT_FALSE(max_abs_diff(a, b) <= 1.0);
}

TEST(DenseMatrix, TransposedProducts) {
  const auto a = random_dense(5, 3, 1), b = random_dense(5, 4, 2), c = random_dense(6, 3, 3);
  EXPECT_LE(max_abs_diff(matmul_at_b(a, b), naive_product(a.transpose(), b)), 1e-12);
  EXPECT_LE(max_abs_diff(matmul_a_bt(a, c), naive_product(a, c.transpose())), 1e-12);
  EXPECT_LE(max_abs_diff(matmul(a, c.transpose()), naive_product(a, c.transpose())), 1e-12);
}
