#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace starpres {

using BigInt = boost::multiprecision::cpp_int;

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix multiply(const IntMatrix& other) const;
  // Exact determinant by fraction-free (Bareiss) elimination.
  BigInt determinant() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> data_;
};

struct SmithDecomposition {
  IntMatrix s;  // diagonal, nonnegative, s[i] | s[i+1]
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols;  u * a * v == s
};

// Elimination with pivot chosen by minimal absolute value; exact arithmetic
// throughout.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace starpres
