#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace jtqes {

/// Dense real symmetric matrix; only the lower triangle is stored.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t dimension)
      : n_(dimension), lower_(dimension * (dimension + 1) / 2, 0.0) {}

  std::size_t dimension() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return lower_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double v) { lower_[index(i, j)] = v; }
  void add(std::size_t i, std::size_t j, double v) { lower_[index(i, j)] += v; }

  std::vector<double> multiply(std::span<const double> x) const;
  double frobenius_norm() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }
  std::size_t n_;
  std::vector<double> lower_;
};

struct EigenDecomposition {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column k (contiguous) belongs to values[k]; empty if not requested
  std::size_t dimension = 0;

  std::span<const double> vector(std::size_t k) const {
    return {vectors.data() + k * dimension, dimension};
  }
};

/// Cyclic Jacobi diagonalization. Iterates until the off-diagonal Frobenius
/// norm falls below tol * ||M||_F. Throws std::invalid_argument on non-finite
/// entries or tol <= 0, std::runtime_error if the sweep limit is exhausted.
EigenDecomposition symmetric_eigen(const SymmetricMatrix& m, double tol = 1e-12, bool want_vectors = true);

}  // namespace jtqes
