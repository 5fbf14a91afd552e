#pragma once

#include <vector>

#include "jtqes/polynomial.hpp"

namespace jtqes {

/// Interval isolating exactly one distinct real root of a polynomial.
///
/// Either an open interval (lower, upper) whose endpoints are not roots, or a
/// degenerate point lower == upper when the root is rational and was hit exactly.
struct RootEnclosure {
  Rational lower;
  Rational upper;
  int multiplicity_hint = 1;

  bool is_exact() const { return lower == upper; }
  Rational width() const { return upper - lower; }
  Rational mid() const { return midpoint(lower, upper); }
  double midpoint_double() const { return mid().to_double(); }
};

/// Sturm sequence of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);
  /// Sign variations at t.
  int variations(const Rational& t) const;
  /// Number of distinct roots in (a, b]; a and b must not be roots.
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
  const Polynomial& base() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

/// Isolates every distinct real root of p in the closed interval [low, high].
/// Enclosures come back sorted, disjoint and no wider than 1; multiplicity
/// comes from the squarefree decomposition. Throws std::domain_error for the zero polynomial.
std::vector<RootEnclosure> isolate_real_roots(const Polynomial& p, const Rational& low, const Rational& high);

/// Bisects e until its width is <= tol. Throws std::invalid_argument when e
/// does not bracket a sign change of the squarefree part of p, or tol <= 0.
RootEnclosure refine_enclosure(const Polynomial& p, const RootEnclosure& e, const Rational& tol);

}  // namespace jtqes
