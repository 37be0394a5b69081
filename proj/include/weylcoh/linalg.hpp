#pragma once

#include <cstddef>
#include <vector>

#include "weylcoh/rational.hpp"

namespace weylcoh {

/// Dense rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
std::size_t exact_rank(const RationalMatrix& m);

}  // namespace weylcoh
