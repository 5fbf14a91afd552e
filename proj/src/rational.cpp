#include "jtqes/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace jtqes {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("Rational: empty string");

  auto check_integer = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };

  mpq_class q;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!check_integer(num, true) || !check_integer(den, false))
      throw std::invalid_argument("Rational: malformed fraction '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    q = mpq_class(n, d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    if (!check_integer(whole, false) || !check_integer(frac, false))
      throw std::invalid_argument("Rational: malformed decimal '" + s + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class n = mpz_class(whole) * scale + mpz_class(frac);
    if (negative) n = -n;
    q = mpq_class(n, scale);
  } else {
    if (!check_integer(s, true)) throw std::invalid_argument("Rational: malformed integer '" + s + "'");
    if (s[0] == '+') s = s.substr(1);
    q = mpq_class(mpz_class(s));
  }
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const {
  return numerator_string() + "/" + denominator_string();
}

std::string Rational::to_short_string() const { return value_.get_str(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

bool Rational::is_half_integer_multiple() const {
  mpq_class twice = value_ * 2;
  twice.canonicalize();
  return twice.get_den() == 1;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_class r = 1 / value_;
  return Rational(r);
}

Rational& Rational::operator+=(const Rational& o) { value_ += o.value_; return *this; }
Rational& Rational::operator-=(const Rational& o) { value_ -= o.value_; return *this; }
Rational& Rational::operator*=(const Rational& o) { value_ *= o.value_; return *this; }
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  mpq_class r = -value_;
  return Rational(r);
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("from_double: non-finite value");
  mpq_class q(x);  // exact binary value
  return Rational(q);
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return Rational(mpq_class(b));
}

}  // namespace jtqes
