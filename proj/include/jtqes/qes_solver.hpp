#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jtqes/bargmann.hpp"
#include "jtqes/fock_oracle.hpp"
#include "jtqes/poly_matrix.hpp"
#include "jtqes/roots.hpp"

namespace jtqes {

/// Banded recurrence matrix in t = kappa^2.
///
/// Unknowns are ordered (w0, v1, w1, v2, ..., v_2k, w_2k), so the order is
/// 4k + 1. Row 2n holds  n v_n + (k + mu - (2n+1+j)/2) w_n + t v_(n+1),
/// row 2n+1 holds (2k - n) w_n + (k - mu - (2n+1+j)/2) v_(n+1) + t w_(n+1).
/// Here mu is the recurrence mu, which is minus the Hamiltonian mu.
struct RecurrenceSystem {
  Rational k, j, mu;
  int order = 0;
  PolyMatrix matrix;
  std::vector<std::string> labels;
};

RecurrenceSystem build_recurrence_matrix(const Rational& k, const Rational& j, const Rational& mu_rec);
Polynomial determinant_polynomial(const RecurrenceSystem& r);

/// Matrix of (L - lambda) in the basis x^n/n! of P_{2k, 2k-1}, ordered like
/// the recurrence unknowns (upper x^n -> w_n, lower x^n -> v_(n+1)).
/// Throws std::logic_error when L leaves the space.
PolyMatrix operator_matrix(const Rational& k, const Rational& j, const Rational& mu_rec);

struct ClosureReport {
  int upper_degree = 0;
  int lower_degree = 0;
  bool preserved = false;
};
/// Whether the QES form of L maps P_{upper, lower} into itself.
ClosureReport check_closure(const Rational& k, const Rational& mu, int upper_degree, int lower_degree);

// ------------------------------------------------------------ printed P_n

enum class P3Reading {
  Literal,    // both leading terms carry kappa^2
  QuarticLead,  // first term read as 128 eta kappa^4
};

struct EtaRhoMap {
  Rational j;
  Rational mu;  // recurrence mu
};
/// j = -(eta + rho + 2)/2, mu = (eta - rho)/4.
EtaRhoMap eta_rho_map(const Rational& eta, const Rational& rho);

/// P1, P2 or P3 for k = 0, 1/2, 1. Throws std::invalid_argument for other k.
Polynomial printed_polynomial(const Rational& k, const Rational& eta, const Rational& rho,
                              P3Reading reading = P3Reading::Literal);

struct ComparisonDraw {
  Rational eta, rho;
  Polynomial determinant;
  Polynomial printed;
  bool proportional = false;
  std::optional<Rational> constant;
  /// printed - (lc(printed)/lc(det)) det; zero exactly when proportional.
  Polynomial difference;
};

struct ComparisonReport {
  Rational k;
  P3Reading reading = P3Reading::Literal;
  bool match = false;
  std::optional<Rational> constant;
  std::vector<ComparisonDraw> draws;
  std::string verdict() const { return match ? "MATCH" : "MISMATCH"; }
};

/// Tests det = c * P over `draws` seeded random rational (eta, rho), plus the
/// optional fixed point. MATCH needs one nonzero c shared by every draw.
ComparisonReport compare_with_printed(const Rational& k, P3Reading reading = P3Reading::Literal, int draws = 5,
                                      std::uint64_t seed = 20240601,
                                      std::optional<std::pair<Rational, Rational>> fixed = std::nullopt);

// ----------------------------------------------------------- Juddian points

class DegenerateDeterminant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleValidation {
  bool performed = false;
  bool via_analogue = false;
  SectorParams sector;
  bool energy_found = false;
  double nearest = 0.0;
  double distance = 0.0;
  int truncation_used = 0;
  std::optional<double> residual;
  int residual_truncation = 0;
  std::string note;
};

struct JuddianPoint {
  Rational k, j, mu, mu_rec;
  Polynomial factor;  // squarefree factor of the determinant vanishing at the root
  int multiplicity = 1;
  RootEnclosure kappa_sq;
  double kappa_sq_value = 0.0;
  double kappa_lower = 0.0, kappa_upper = 0.0;
  Rational energy_lower, energy_upper;
  double energy = 0.0;
  Rational lambda;
  std::vector<Polynomial> coefficients;  // w0, v1, w1, ..., reduced modulo `factor`
  bool exact_eigencheck = false;
  bool series_check = false;
  OracleValidation oracle;

  double kappa() const;
  /// Coefficient vector as a spinor (upper = sum w_n x^n/n!, lower = sum v_(n+1) x^n/n!).
  PolynomialSpinor spinor() const;
};

struct JuddianSettings {
  Rational kappa_max{10};
  Rational tol{Rational(1, 1000000000)};
  bool run_oracle = true;
  int min_truncation = 40;
  double oracle_tol = 1e-10;
};

struct JuddianResult {
  RecurrenceSystem system;
  Polynomial determinant;
  int t_power = 0;        // multiplicity of the root t = 0, divided out
  Polynomial reduced;     // determinant / t^t_power
  std::vector<JuddianPoint> points;
  bool baseline_condition = false;  // reduced determinant is a nonzero constant
  std::string note;
};

/// Finds every root t in (0, kappa_max^2] of the determinant, solves the null
/// vector exactly modulo the vanishing factor, checks L s = lambda s there,
/// and (for integer j) compares E = 2k + 1/2 - 2t with the numerical oracle.
/// `mu` is the Hamiltonian mu. Throws DegenerateDeterminant when the
/// determinant vanishes identically.
JuddianResult juddian_points(const Rational& k, const Rational& j, const Rational& mu,
                             const JuddianSettings& settings = {});

/// Top-down null vector with w0 = 1 in Q[t]/(modulus). Requires modulus(0) != 0.
std::vector<Polynomial> null_vector(const RecurrenceSystem& r, const Polynomial& modulus);

/// L s == lambda s modulo `modulus`, with s built from `coefficients`.
bool exact_eigencheck(const std::vector<Polynomial>& coefficients, const Rational& k, const Rational& j,
                      const Rational& mu, const Polynomial& modulus);
bool exact_eigencheck(const JuddianPoint& p);

/// Checks the Fock-space amplitude identities
///   (m - eps + mu) Q(m) + t R(m) + m R(m-1) = 0
///   t Q(m+1) + (m + j + 1) Q(m) + (m - eps - mu) R(m) = 0
/// for m = 0..2k+2, where Q(m) = sum w_n C(m,n), R(m) = -sum (w_n + v_(n+1)) C(m,n).
bool series_identity_check(const std::vector<Polynomial>& coefficients, const Rational& k, const Rational& j,
                           const Rational& mu, const Polynomial& modulus);

struct FactorCheck {
  Polynomial factor;
  bool passed = false;
};
/// Runs the exact eigencheck modulo every nonconstant squarefree factor of the
/// determinant (factors of t removed). `mu_rec` is the recurrence mu.
std::vector<FactorCheck> eigencheck_all_factors(const Rational& k, const Rational& j, const Rational& mu_rec);

/// Sector amplitudes of the exact eigenstate, interleaved up(0), down(0), ...:
///   up(m)   = t^m Q(m) / sqrt(m! (m+j)!)
///   down(m) = kappa t^m R(m) / sqrt(m! (m+j+1)!)
/// Requires integer j >= 0 and kappa > 0.
std::vector<double> reconstruct_fock_state(const JuddianPoint& point, int truncation);

}  // namespace jtqes
