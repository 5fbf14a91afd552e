#pragma once

#include <optional>
#include <string>

#include "jtqes/rational.hpp"

namespace jtqes {

/// Physical parameters of one angular-momentum sector.
///
/// `mu` is the mu of the Hamiltonian H = n1 + n2 + 1 + (1/2 + 2mu) s0 + 2kappa[...].
/// The recurrence matrix is written with the opposite sign; see
/// recurrence_mu().
struct SectorParams {
  Rational j{0};
  Rational mu{0};
  double kappa = 0.0;
  Rational k{0};

  /// True iff j is an integer >= 0.
  bool realizable_sector() const { return j.is_integer() && j.sign() >= 0; }
  /// 2k is a nonnegative integer.
  bool valid_k() const { return k.sign() >= 0 && k.is_half_integer_multiple(); }
  long j_int() const;
};

/// The mu entering the recurrence matrix for a Hamiltonian with this mu.
inline Rational recurrence_mu(const Rational& hamiltonian_mu) { return -hamiltonian_mu; }
inline Rational hamiltonian_mu(const Rational& recurrence_mu) { return -recurrence_mu; }

/// Parses a nonnegative k with 2k integer; throws std::invalid_argument otherwise.
long two_k(const Rational& k);

}  // namespace jtqes
