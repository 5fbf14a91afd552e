#include "jtqes/params.hpp"

#include <stdexcept>

namespace jtqes {

long SectorParams::j_int() const {
  if (!j.is_integer()) throw std::invalid_argument("SectorParams: j is not an integer");
  return std::stol(j.numerator_string());
}

long two_k(const Rational& k) {
  Rational twice = k * Rational(2);
  if (k.sign() < 0 || !twice.is_integer())
    throw std::invalid_argument("k must satisfy 2k in {0, 1, 2, ...}, got " + k.to_short_string());
  return std::stol(twice.numerator_string());
}

}  // namespace jtqes
