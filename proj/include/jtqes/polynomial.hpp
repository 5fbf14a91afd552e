#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jtqes/rational.hpp"

namespace jtqes {

/// Univariate polynomial with exact rational coefficients.
///
/// The formal variable is t = kappa^2 throughout the solver; index i of the
/// coefficient vector is the coefficient of t^i. Trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient vector.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial variable() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;
  int sign_at(const Rational& t) const { return evaluate(t).sign(); }

  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial operator-() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
/// Euclidean division; throws std::domain_error on a zero divisor.
DivisionResult divmod(const Polynomial& a, const Polynomial& b);
/// Exact division; throws std::logic_error when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial gcd;  // monic
  Polynomial s;    // s*a + u*b == gcd
  Polynomial u;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// Yun squarefree decomposition: p = c * prod_i factors[i].first^factors[i].second,
/// each factor monic, squarefree and pairwise coprime.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);
/// Monic squarefree part of p.
Polynomial squarefree_part(const Polynomial& p);

/// Substitutes a rational-coefficient polynomial q for the variable: p(q(t)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

}  // namespace jtqes
