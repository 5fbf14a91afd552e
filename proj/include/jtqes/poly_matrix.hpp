#pragma once

#include <vector>

#include "jtqes/polynomial.hpp"

namespace jtqes {

/// Dense square-or-rectangular matrix with polynomial entries (row major).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix transpose() const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> data_;
};

/// Exact determinant of a square matrix whose nonzero entries lie within
/// `bandwidth` of the diagonal. Cofactor expansion for order <= 4,
/// fraction-free (Bareiss) elimination above that.
/// Throws std::invalid_argument for non-square input or entries outside the band.
Polynomial banded_determinant(const PolyMatrix& m, std::size_t bandwidth);

}  // namespace jtqes
