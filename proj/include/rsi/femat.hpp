#pragma once

// Dense matrices over a Field, with exact Gaussian elimination.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rsi/gf.hpp"

namespace rsi {

/// Row-major rows x cols matrix of field elements. Zero-sized dimensions are
/// allowed and behave as the null matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<std::uint32_t>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Fe& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fe operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Fe> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fe> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fe> data_;
};

Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b, const Field& f);
std::vector<Fe> multiply(const Matrix& a, std::span<const Fe> x, const Field& f);

/// rows x cols matrix with entry (i, j) = seq[offset + i + j].
Matrix hankel(std::span<const Fe> seq, std::size_t rows, std::size_t cols, std::size_t offset = 0);

/// order x points.size() matrix with entry (i, j) = points[j]^i.
Matrix vandermonde(std::span<const Fe> points, std::size_t order, const Field& f);

/// Row-echelon rank. The null matrix (and any 0 x c or r x 0 matrix) has rank 0.
std::size_t rank(const Matrix& m, const Field& f);

/// Elimination with row-swap sign tracking. Throws NonSquare.
Fe det(const Matrix& m, const Field& f);

enum class SolveKind { Unique, NoSolution, Underdetermined };

struct Solution {
  SolveKind kind = SolveKind::NoSolution;
  /// Filled only for SolveKind::Unique.
  std::vector<Fe> x;
};

/// Gauss-Jordan on [a | b]. Throws LengthMismatch when b.size() != a.rows().
Solution solve(const Matrix& a, std::span<const Fe> b, const Field& f);

}  // namespace rsi
