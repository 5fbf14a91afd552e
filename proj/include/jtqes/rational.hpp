#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace jtqes {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. Half-integer physical
/// parameters (j, k, mu) live here so that no floating point enters the
/// exact code paths.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "p/q", "p", or a finite decimal such as "-0.25" (read exactly).
  static Rational parse(std::string_view text);

  /// Serializes as "num/den" (the denominator is always written).
  std::string to_string() const;
  /// Canonical short form: "3", "-1/2".
  std::string to_short_string() const;

  double to_double() const { return value_.get_d(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  /// True when 2 * value is an integer.
  bool is_half_integer_multiple() const;

  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  Rational abs() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_short_string();
  }

 private:
  mpq_class value_{0};
};

Rational midpoint(const Rational& a, const Rational& b);
/// Exact binary value of a finite double.
Rational from_double(double x);
/// n! as a rational.
Rational factorial(unsigned n);
/// Binomial coefficient C(n, r) (zero when r > n).
Rational binomial(long n, long r);

}  // namespace jtqes
