#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "quotcoh/rational.hpp"

namespace quotcoh {

/// Dense row-major matrix over an exact scalar type.
template <class T> class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw std::invalid_argument("DenseMatrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix from_rows(const std::vector<std::vector<T>> &rows, std::size_t cols) {
    DenseMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("DenseMatrix: row length mismatch");
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(Rational(1));
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T &operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T &operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

  friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<Rational>;
using ExtMatrix = DenseMatrix<ExtScalar>;
using Vector = std::vector<Rational>;

/// Reduced row echelon form: nonzero rows only, pivots normalized to 1.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Fraction-free (Bareiss) elimination after clearing row denominators.
/// Pivot rule: first nonzero entry in column order.
Echelon row_echelon(const Matrix &m);

std::size_t rank(const Matrix &m);

/// cols - rank vectors spanning ker m, one per free column: the free
/// coordinate is 1, the other free coordinates are 0.
std::vector<Vector> nullspace_basis(const Matrix &m);

Matrix transpose(const Matrix &m);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator*(const Rational &s, const Matrix &m);
Vector operator*(const Matrix &m, const Vector &v);
bool is_zero(const Matrix &m);

/// Reduces v against the rows of an echelon form; the result is zero iff v
/// lies in the row space.
Vector reduce(const Echelon &e, Vector v);

/// Replaces alpha by a rational value.
Matrix specialize(const ExtMatrix &m, const Rational &alpha);

/// Rank over Q(alpha) with alpha treated as transcendental. A nonzero
/// r x r minor of A0 + alpha*A1 is a polynomial of degree <= r in alpha, so it
/// cannot vanish at all of alpha = 0, 1, ..., r; the maximum rank over those
/// specializations is the generic rank.
std::size_t generic_rank(const ExtMatrix &m);

/// Pivot columns of the echelon form over Q(alpha): column j is a pivot iff
/// adding it raises the generic rank of the leading columns.
std::vector<std::size_t> generic_pivot_columns(const ExtMatrix &m);

/// A specialization alpha = t (t in 0, 1, ...) attaining the generic rank.
Rational generic_specialization_point(const ExtMatrix &m);

} // namespace quotcoh
