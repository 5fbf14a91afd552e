#include "jtqes/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jtqes {

std::vector<double> SymmetricMatrix::multiply(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("SymmetricMatrix::multiply: size mismatch");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double a = lower_[i * (i + 1) / 2 + j];
      if (a == 0.0) continue;
      y[i] += a * x[j];
      y[j] += a * x[i];
    }
    y[i] += lower_[i * (i + 1) / 2 + i] * x[i];
  }
  return y;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double a = lower_[i * (i + 1) / 2 + j];
      s += (i == j ? 1.0 : 2.0) * a * a;
    }
  return std::sqrt(s);
}

EigenDecomposition symmetric_eigen(const SymmetricMatrix& m, double tol, bool want_vectors) {
  if (!(tol > 0.0)) throw std::invalid_argument("symmetric_eigen: tolerance must be positive");
  const std::size_t n = m.dimension();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v)) throw std::invalid_argument("symmetric_eigen: non-finite entry");
      a[i * n + j] = v;
    }
  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }

  const double norm = m.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_norm() <= tol * norm) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p], aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = a[q * n + p] = 0.0;
        if (want_vectors) {
          // rows of v hold eigenvectors during the sweep
          for (std::size_t k = 0; k < n; ++k) {
            const double vp = v[p * n + k], vq = v[q * n + k];
            v[p * n + k] = c * vp - s * vq;
            v[q * n + k] = s * vp + c * vq;
          }
        }
      }
    }
  }
  if (sweep == kMaxSweeps && off_norm() > tol * norm)
    throw std::runtime_error("symmetric_eigen: Jacobi iteration did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

  EigenDecomposition out;
  out.dimension = n;
  out.values.reserve(n);
  for (std::size_t k : order) out.values.push_back(a[k * n + k]);
  if (want_vectors) {
    out.vectors.resize(n * n);
    for (std::size_t c = 0; c < n; ++c)
      std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(order[c] * n), n,
                  out.vectors.begin() + static_cast<std::ptrdiff_t>(c * n));
  }
  return out;
}

}  // namespace jtqes
