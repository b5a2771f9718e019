#include "phidim/exactmat.hpp"

#include <algorithm>
#include <utility>

namespace phidim {

IntMatrix mat_pow(const IntMatrix& a, std::size_t e) {
  if (!a.square()) throw ShapeError("mat_pow: matrix is not square");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (e > 0) {
    if (e & 1U) result = mat_mul(result, base);
    e >>= 1U;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = Rational(a(r, c));
  return out;
}

namespace {

// Bareiss elimination to row echelon form. Works on a working copy; every
// surviving entry stays an integer minor of the input, so the division by the
// previous pivot is exact.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t rank = 0;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Integer p = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = m[i][j] * p - lead * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  return bareiss_rank(std::move(m), a.cols());
}

std::size_t rank(const RatMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) den = lcm(den, Integer(a(r, c).get_den()));
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Rational scaled = a(r, c) * den;
      m[r][c] = scaled.get_num();
    }
  }
  return bareiss_rank(std::move(m), a.cols());
}

std::vector<Integer> smith_diagonal(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix m = a;
  const std::size_t diag = std::min(rows, cols);
  Integer q;

  for (std::size_t t = 0; t < diag; ++t) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (m(r, c) == 0) continue;
        if (!found || abs(m(r, c)) < abs(m(pr, pc))) {
          pr = r;
          pc = c;
          found = true;
        }
      }
    }
    if (!found) break;

    for (;;) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(t, c), m(pr, c));
      for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, t), m(r, pc));

      // Reduce the pivot row and column by Euclidean division; a nonzero
      // remainder is strictly smaller than the pivot and becomes the new one.
      bool moved = false;
      for (std::size_t r = t + 1; r < rows && !moved; ++r) {
        if (m(r, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) {
          pr = r;
          pc = t;
          moved = true;
        }
      }
      for (std::size_t c = t + 1; c < cols && !moved; ++c) {
        if (m(t, c) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) {
          pr = t;
          pc = c;
          moved = true;
        }
      }
      if (moved) continue;

      // Pivot must divide the whole trailing block; otherwise fold an
      // offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            for (std::size_t cc = t; cc < cols; ++cc) m(t, cc) += m(r, cc);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
      pr = t;
      pc = t;
    }
  }

  std::vector<Integer> out(diag);
  for (std::size_t i = 0; i < diag; ++i) out[i] = abs(m(i, i));
  return out;
}

std::size_t rank_smith(const IntMatrix& a) {
  const auto d = smith_diagonal(a);
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Integer& x) { return x != 0; }));
}

Integer determinant(const IntMatrix& a) {
  if (!a.square()) throw ShapeError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  Integer tmp;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        tmp = m(i, j) * m(c, c) - m(i, c) * m(c, j);
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(c, c);
  }
  return sign * m(n - 1, n - 1);
}

RatMatrix rat_inverse(const RatMatrix& a) {
  if (!a.square()) throw ShapeError("rat_inverse: matrix is not square");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError(rank(a));
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    const Rational p = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

IntMatrix submatrix_delete(const IntMatrix& a, const std::set<std::size_t>& delete_rows,
                           const std::set<std::size_t>& delete_cols) {
  if (!delete_rows.empty() && *delete_rows.rbegin() >= a.rows())
    throw BoundsError("submatrix_delete: row index " + std::to_string(*delete_rows.rbegin()) + " out of range");
  if (!delete_cols.empty() && *delete_cols.rbegin() >= a.cols())
    throw BoundsError("submatrix_delete: column index " + std::to_string(*delete_cols.rbegin()) + " out of range");
  IntMatrix out(a.rows() - delete_rows.size(), a.cols() - delete_cols.size());
  std::size_t orow = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (delete_rows.count(r)) continue;
    std::size_t ocol = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (delete_cols.count(c)) continue;
      out(orow, ocol++) = a(r, c);
    }
    ++orow;
  }
  return out;
}

}  // namespace phidim
