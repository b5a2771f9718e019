#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace phidim {

using Integer = mpz_class;
using Rational = mpq_class;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised by rat_inverse; carries the rank that was found.
class SingularMatrixError : public std::domain_error {
 public:
  explicit SingularMatrixError(std::size_t rank)
      : std::domain_error("matrix is singular (rank " + std::to_string(rank) + ")"), rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// Dense row-major matrix over an exact ring. Empty shapes (0 rows or 0
/// columns) are legal.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw ShapeError("entry count " + std::to_string(data_.size()) + " does not match " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    normalize();
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged initializer list");
      data_.insert(data_.end(), row.begin(), row.end());
    }
    normalize();
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const T& at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw BoundsError("matrix index out of range");
    return (*this)(r, c);
  }

  const std::vector<T>& entries() const noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void normalize() {
    if constexpr (std::is_same_v<T, Rational>) {
      for (auto& x : data_) x.canonicalize();
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const T& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(l, j);
    }
  }
  return out;
}

template <typename T>
Matrix<T> scale(const Matrix<T>& a, const T& factor) {
  Matrix<T> out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= factor;
  return out;
}

/// a^e by binary exponentiation; a^0 is the identity.
IntMatrix mat_pow(const IntMatrix& a, std::size_t e);

RatMatrix to_rational(const IntMatrix& a);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& a);
/// Rows are scaled to integers by their denominator lcm before elimination.
std::size_t rank(const RatMatrix& a);

/// Diagonal of the Smith normal form (length min(rows, cols)), nonnegative,
/// each entry dividing the next, zeros last.
std::vector<Integer> smith_diagonal(const IntMatrix& a);
std::size_t rank_smith(const IntMatrix& a);

Integer determinant(const IntMatrix& a);

RatMatrix rat_inverse(const RatMatrix& a);

IntMatrix submatrix_delete(const IntMatrix& a, const std::set<std::size_t>& delete_rows,
                           const std::set<std::size_t>& delete_cols);

}  // namespace phidim
