#pragma once

#include <memory>
#include <stdexcept>

#include "jtqes/polynomial.hpp"

namespace jtqes {

/// Raised when an element shares a nontrivial factor with the modulus.
/// The factor tells the caller how to split the modulus and retry.
class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(Polynomial factor)
      : std::domain_error("quotient ring element is not invertible"), factor_(std::move(factor)) {}
  const Polynomial& factor() const { return factor_; }

 private:
  Polynomial factor_;
};

/// Element of Q[t]/(modulus), kept as the reduced representative.
class QuotientElement {
 public:
  /// Reduces rep modulo modulus. The modulus must be squarefree of degree >= 1.
  QuotientElement(const Polynomial& rep, std::shared_ptr<const Polynomial> modulus);
  static QuotientElement make(const Polynomial& rep, const Polynomial& modulus);

  const Polynomial& representative() const { return rep_; }
  const Polynomial& modulus() const { return *mod_; }
  const std::shared_ptr<const Polynomial>& modulus_ptr() const { return mod_; }
  bool is_zero() const { return rep_.is_zero(); }

  QuotientElement operator+(const QuotientElement& o) const;
  QuotientElement operator-(const QuotientElement& o) const;
  QuotientElement operator*(const QuotientElement& o) const;
  QuotientElement operator-() const;
  /// Throws NotInvertible when gcd(rep, modulus) is not constant.
  QuotientElement inverse() const;

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.modulus() == b.modulus() && a.rep_ == b.rep_;
  }

 private:
  void require_same_ring(const QuotientElement& o) const;
  Polynomial rep_;
  std::shared_ptr<const Polynomial> mod_;
};

enum class QuotientOp { Add, Mul, Inv };
/// `b` is ignored for Inv.
QuotientElement quotient_ops(const QuotientElement& a, const QuotientElement& b, QuotientOp op);

}  // namespace jtqes
