#include "jtqes/quotient.hpp"

namespace jtqes {

QuotientElement::QuotientElement(const Polynomial& rep, std::shared_ptr<const Polynomial> modulus)
    : mod_(std::move(modulus)) {
  if (!mod_ || mod_->degree() < 1) throw std::invalid_argument("QuotientElement: modulus must have degree >= 1");
  rep_ = divmod(rep, *mod_).remainder;
}

QuotientElement QuotientElement::make(const Polynomial& rep, const Polynomial& modulus) {
  return QuotientElement(rep, std::make_shared<const Polynomial>(modulus));
}

void QuotientElement::require_same_ring(const QuotientElement& o) const {
  if (mod_ != o.mod_ && !(*mod_ == *o.mod_)) throw std::invalid_argument("QuotientElement: moduli differ");
}

QuotientElement QuotientElement::operator+(const QuotientElement& o) const {
  require_same_ring(o);
  return QuotientElement(rep_ + o.rep_, mod_);
}

QuotientElement QuotientElement::operator-(const QuotientElement& o) const {
  require_same_ring(o);
  return QuotientElement(rep_ - o.rep_, mod_);
}

QuotientElement QuotientElement::operator*(const QuotientElement& o) const {
  require_same_ring(o);
  return QuotientElement(rep_ * o.rep_, mod_);
}

QuotientElement QuotientElement::operator-() const { return QuotientElement(-rep_, mod_); }

QuotientElement QuotientElement::inverse() const {
  if (rep_.is_zero()) throw NotInvertible(mod_->monic());
  ExtendedGcd eg = extended_gcd(rep_, *mod_);
  if (eg.gcd.degree() > 0) throw NotInvertible(eg.gcd);
  return QuotientElement(eg.s, mod_);
}

QuotientElement quotient_ops(const QuotientElement& a, const QuotientElement& b, QuotientOp op) {
  switch (op) {
    case QuotientOp::Add: return a + b;
    case QuotientOp::Mul: return a * b;
    case QuotientOp::Inv: return a.inverse();
  }
  throw std::invalid_argument("quotient_ops: unknown op");
}

}  // namespace jtqes
