#include "jtqes/poly_matrix.hpp"

#include <stdexcept>

namespace jtqes {

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

Polynomial cofactor_det(const PolyMatrix& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 1) return m(rows[0], cols[0]);
  Polynomial acc;
  const std::size_t r = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < n; ++c) {
    const Polynomial& entry = m(r, cols[c]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) sub_cols.push_back(cols[k]);
    Polynomial minor = cofactor_det(m, sub_rows, sub_cols);
    if (c % 2 == 0) {
      acc += entry * minor;
    } else {
      acc -= entry * minor;
    }
  }
  return acc;
}

Polynomial bareiss_det(PolyMatrix a) {
  const std::size_t n = a.rows();
  Polynomial prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = exact_divide(num, prev);
      }
      a(i, k) = Polynomial();
    }
    prev = a(k, k);
  }
  Polynomial det = a(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace

Polynomial banded_determinant(const PolyMatrix& m, std::size_t bandwidth) {
  if (m.rows() != m.cols()) throw std::invalid_argument("banded_determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t dist = i > j ? i - j : j - i;
      if (dist > bandwidth && !m(i, j).is_zero())
        throw std::invalid_argument("banded_determinant: nonzero entry outside the stated band");
    }
  if (n <= 4) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::size_t> cols = idx;
    return cofactor_det(m, idx, cols);
  }
  return bareiss_det(m);
}

}  // namespace jtqes
