#include "rsi/femat.hpp"

#include <algorithm>
#include <string>

#include "rsi/error.hpp"

namespace rsi {

namespace {

// Reduces m in place to row-echelon form, pivoting on the first nonzero entry
// of each column. Elimination stops at column `col_limit`. Returns the pivot
// columns in row order; `swaps` gets the number of row exchanges.
std::vector<std::size_t> echelon(Matrix& m, const Field& f, std::size_t col_limit,
                                 std::size_t* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == Fe{0}) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(row).begin());
      if (swaps) ++*swaps;
    }
    const Fe inv = f.inv(m(row, col));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == Fe{0}) continue;
      const Fe factor = f.mul(m(r, col), inv);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<std::uint32_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw LengthMismatch("ragged matrix initializer");
    for (std::uint32_t v : r) data_.push_back(Fe{v});
  }
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Fe x) { return x == Fe{0}; });
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f) {
  if (a.cols() != b.rows()) {
    throw LengthMismatch("matrix product of " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Fe ail = a(i, l);
      if (ail == Fe{0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(ail, b(l, j)));
      }
    }
  }
  return out;
}

std::vector<Fe> multiply(const Matrix& a, std::span<const Fe> x, const Field& f) {
  if (a.cols() != x.size()) throw LengthMismatch("matrix-vector size mismatch");
  std::vector<Fe> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Fe acc{0};
    for (std::size_t j = 0; j < a.cols(); ++j) acc = f.add(acc, f.mul(a(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

Matrix hankel(std::span<const Fe> seq, std::size_t rows, std::size_t cols, std::size_t offset) {
  if (rows != 0 && cols != 0 && offset + rows + cols - 1 > seq.size()) {
    throw LengthMismatch("Hankel matrix needs more sequence terms than supplied");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = seq[offset + i + j];
  }
  return m;
}

Matrix vandermonde(std::span<const Fe> points, std::size_t order, const Field& f) {
  Matrix v(order, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    Fe power{1};
    for (std::size_t i = 0; i < order; ++i) {
      v(i, j) = power;
      power = f.mul(power, points[j]);
    }
  }
  return v;
}

std::size_t rank(const Matrix& m, const Field& f) {
  Matrix work = m;
  return echelon(work, f, work.cols()).size();
}

Fe det(const Matrix& m, const Field& f) {
  if (!m.is_square()) throw NonSquare();
  Matrix work = m;
  std::size_t swaps = 0;
  if (echelon(work, f, work.cols(), &swaps).size() < work.rows()) return Fe{0};
  Fe d{1};
  for (std::size_t i = 0; i < work.rows(); ++i) d = f.mul(d, work(i, i));
  return swaps % 2 == 0 ? d : f.neg(d);
}

Solution solve(const Matrix& a, std::span<const Fe> b, const Field& f) {
  if (b.size() != a.rows()) throw LengthMismatch("right-hand side length differs from row count");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug(r, n) = b[r];
  }

  const auto pivots = echelon(aug, f, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug(r, n) != Fe{0}) return {SolveKind::NoSolution, {}};
  }
  if (pivots.size() < n) return {SolveKind::Underdetermined, {}};

  // Back substitution; pivots[i] == i here.
  std::vector<Fe> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Fe acc = aug(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc = f.sub(acc, f.mul(aug(i, j), x[j]));
    x[i] = f.div(acc, aug(i, i));
  }
  return {SolveKind::Unique, std::move(x)};
}

}  // namespace rsi
