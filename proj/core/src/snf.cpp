#include "starpres/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace starpres {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix dimensions do not match");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& f = at(i, k);
      if (f == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += f * other.at(k, j);
    }
  return out;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign < 0 ? BigInt(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SmithDecomposition d{a, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& s = d.s;
  IntMatrix& u = d.u;
  IntMatrix& v = d.v;

  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(s.at(r1, j), s.at(r2, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(r1, j), u.at(r2, j));
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(s.at(i, c1), s.at(i, c2));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, c1), v.at(i, c2));
  };
  // row dst += factor * row src
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t j = 0; j < cols; ++j) s.at(dst, j) += factor * s.at(src, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) += factor * u.at(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t i = 0; i < rows; ++i) s.at(i, dst) += factor * s.at(i, src);
    for (std::size_t i = 0; i < cols; ++i) v.at(i, dst) += factor * v.at(i, src);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) s.at(r, j) = -s.at(r, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
  };

  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (s.at(i, j) == 0) continue;
        if (!found || abs_val(s.at(i, j)) < abs_val(s.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    // Clear row and column t; each promotion strictly shrinks the pivot, so
    // this terminates.
    for (bool clean = false; !clean;) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.at(i, t) == 0) continue;
        BigInt q = s.at(i, t) / s.at(t, t);
        if (q != 0) add_row(i, t, -q);
        if (s.at(i, t) != 0) {
          swap_rows(t, i);
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.at(t, j) == 0) continue;
        BigInt q = s.at(t, j) / s.at(t, t);
        if (q != 0) add_col(j, t, -q);
        if (s.at(t, j) != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // The pivot must divide every remaining entry for the diagonal chain.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols && clean; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            add_row(t, i, 1);
            clean = false;
          }
    }
    if (s.at(t, t) < 0) negate_row(t);
  }
  return d;
}

}  // namespace starpres
