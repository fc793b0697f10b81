#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "sturm/rational.hpp"

namespace sturm {

/// Dense row-major matrix of rationals. Indices are zero-based.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  RationalMatrix transpose() const;
  // Copy with the given (zero-based, sorted or not) rows and columns removed.
  RationalMatrix without(const std::vector<std::size_t>& drop_rows, const std::vector<std::size_t>& drop_cols) const;
  bool is_symmetric() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact determinant. Each row is scaled to integers by the lcm of its
// denominators and the integer matrix is reduced by Bareiss fraction-free
// elimination with row pivoting. det of the 0x0 matrix is 1.
Rational determinant(const RationalMatrix& m);

// First-row cofactor expansion; exponential, meant for tiny matrices.
Rational cofactor_determinant(const RationalMatrix& m);

}  // namespace sturm
