#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jtqes/polynomial.hpp"
#include "jtqes/rational.hpp"

namespace jtqes {

/// Polynomial in x whose coefficients are polynomials in t = kappa^2.
class XPolynomial {
 public:
  XPolynomial() = default;
  explicit XPolynomial(std::vector<Polynomial> coefficients);
  static XPolynomial monomial(const Polynomial& c, std::size_t degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  Polynomial coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Polynomial(); }

  XPolynomial& operator+=(const XPolynomial& o);
  XPolynomial& operator-=(const XPolynomial& o);
  XPolynomial& operator*=(const Polynomial& c);
  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(XPolynomial a, const Polynomial& c) { return a *= c; }
  friend bool operator==(const XPolynomial& a, const XPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Replaces every coefficient by its remainder modulo m.
  XPolynomial reduced_mod(const Polynomial& m) const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Polynomial> coeffs_;
};

/// Two-component polynomial wavefunction (phi1 upper, phi2 lower).
struct PolynomialSpinor {
  XPolynomial upper;
  XPolynomial lower;

  /// True when deg(upper) <= n_upper and deg(lower) <= n_lower.
  bool in_space(int n_upper, int n_lower) const {
    return upper.degree() <= n_upper && lower.degree() <= n_lower;
  }
  PolynomialSpinor reduced_mod(const Polynomial& m) const { return {upper.reduced_mod(m), lower.reduced_mod(m)}; }
  friend bool operator==(const PolynomialSpinor&, const PolynomialSpinor&) = default;
};

/// Finite sum of c(t) x^a (d/dx)^b, kept in normal order.
class ScalarDiffOp {
 public:
  using Key = std::pair<int, int>;  // (power of x, power of d/dx)

  ScalarDiffOp() = default;
  static ScalarDiffOp constant(const Polynomial& c) { return term(c, 0, 0); }
  static ScalarDiffOp term(const Polynomial& c, int x_power, int d_power);
  static ScalarDiffOp x() { return term(Polynomial(1), 1, 0); }
  static ScalarDiffOp d() { return term(Polynomial(1), 0, 1); }

  const std::map<Key, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  XPolynomial apply(const XPolynomial& f) const;
  /// Fischer adjoint: (x^a D^b)^dagger = x^b D^a.
  ScalarDiffOp adjoint() const;

  ScalarDiffOp& operator+=(const ScalarDiffOp& o);
  ScalarDiffOp& operator-=(const ScalarDiffOp& o);
  ScalarDiffOp& operator*=(const Polynomial& c);
  friend ScalarDiffOp operator+(ScalarDiffOp a, const ScalarDiffOp& b) { return a += b; }
  friend ScalarDiffOp operator-(ScalarDiffOp a, const ScalarDiffOp& b) { return a -= b; }
  friend ScalarDiffOp operator*(ScalarDiffOp a, const Polynomial& c) { return a *= c; }
  friend ScalarDiffOp operator*(const Polynomial& c, ScalarDiffOp a) { return a *= c; }
  /// Composition, normal ordered with D^a x^b = sum_i C(a,i) b!/(b-i)! x^(b-i) D^(a-i).
  friend ScalarDiffOp operator*(const ScalarDiffOp& a, const ScalarDiffOp& b);
  friend bool operator==(const ScalarDiffOp&, const ScalarDiffOp&) = default;

  std::string to_string() const;

 private:
  void add_term(const Key& key, const Polynomial& c);
  std::map<Key, Polynomial> terms_;
};

/// 2x2 matrix of scalar differential operators acting on PolynomialSpinor.
/// Entry (r, c) maps slot c to slot r; slot 0 is upper, slot 1 is lower.
class SpinorOperator {
 public:
  SpinorOperator() = default;
  static SpinorOperator diagonal(const ScalarDiffOp& op) { return from_entries(op, {}, {}, op); }
  static SpinorOperator from_entries(ScalarDiffOp uu, ScalarDiffOp ul, ScalarDiffOp lu, ScalarDiffOp ll);
  /// sigma+ = [[0,1],[0,0]] moves the lower slot up.
  static SpinorOperator sigma_plus();
  /// sigma- = [[0,0],[1,0]] moves the upper slot down.
  static SpinorOperator sigma_minus();
  /// sigma- sigma+ = diag(0, 1).
  static SpinorOperator lower_projector();

  ScalarDiffOp& at(int r, int c) { return entries_[static_cast<std::size_t>(2 * r + c)]; }
  const ScalarDiffOp& at(int r, int c) const { return entries_[static_cast<std::size_t>(2 * r + c)]; }

  PolynomialSpinor apply(const PolynomialSpinor& s) const;
  SpinorOperator adjoint() const;

  SpinorOperator& operator+=(const SpinorOperator& o);
  SpinorOperator& operator-=(const SpinorOperator& o);
  SpinorOperator& operator*=(const Polynomial& c);
  friend SpinorOperator operator+(SpinorOperator a, const SpinorOperator& b) { return a += b; }
  friend SpinorOperator operator-(SpinorOperator a, const SpinorOperator& b) { return a -= b; }
  friend SpinorOperator operator*(SpinorOperator a, const Polynomial& c) { return a *= c; }
  friend SpinorOperator operator*(const Polynomial& c, SpinorOperator a) { return a *= c; }
  friend SpinorOperator operator*(const SpinorOperator& a, const SpinorOperator& b);
  friend bool operator==(const SpinorOperator&, const SpinorOperator&) = default;

  std::string to_string() const;

 private:
  std::array<ScalarDiffOp, 4> entries_{};
};

SpinorOperator commutator(const SpinorOperator& a, const SpinorOperator& b);
SpinorOperator anticommutator(const SpinorOperator& a, const SpinorOperator& b);
inline PolynomialSpinor apply_operator(const SpinorOperator& op, const PolynomialSpinor& s) { return op.apply(s); }

/// Spinors with a single monomial x^n in one slot.
PolynomialSpinor upper_monomial(int n);
PolynomialSpinor lower_monomial(int n);

/// Compares a and b on every monomial spinor of degree <= max_degree.
bool equal_on_monomials(const SpinorOperator& a, const SpinorOperator& b, int max_degree);

enum class LoweringVariant {
  Corrected,  // J- = x D^2 - 2k D + sigma-sigma+ D
  Printed,    // J- = x D^2 - 2k D + sigma-sigma+
};

/// The osp(2,2) generators for representation label k.
struct GeneratorSet {
  explicit GeneratorSet(const Rational& k, LoweringVariant variant = LoweringVariant::Corrected);

  Rational k;
  SpinorOperator J_plus, J_minus, J_zero, J;
  SpinorOperator Q1, Q2, Qbar1, Qbar2;

  /// Number operators assembled directly: N1 = 2k - x D, N2 = x D + sigma-sigma+.
  SpinorOperator N1_direct() const;
  SpinorOperator N2_direct() const;
};

struct IdentityResult {
  std::string relation;
  bool passed = false;
};

struct AlgebraReport {
  Rational k;
  int max_degree = 0;
  std::vector<IdentityResult> results;
  bool all_passed() const;
};

/// Checks the sl2 relations, the fermionic anticommutators, the number
/// operators and their action on the fermionic generators, each as an
/// apply-and-compare identity on monomial spinors of degree <= 2k + 3.
AlgebraReport run_algebra_suite(const Rational& k, LoweringVariant variant = LoweringVariant::Corrected);

enum class LForm {
  Printed,  // 2mu N1 + (1+2mu) N2 + t(Q1 + Qbar2) + Q2 + Qbar1
  Ode,      // (1+2mu) N1 + 2mu N2 + t(Q1 + Qbar2) + Q2 + Qbar1
  Qes,      // Fischer adjoint of the Ode form
};

/// The QES operator with t = kappa^2 carried as the polynomial variable.
/// `mu` is the Hamiltonian mu. The Qes form preserves P_{2k, 2k-1}.
SpinorOperator build_L(const Rational& k, const Rational& mu, LForm form = LForm::Qes);

struct ParameterMaps {
  Rational lambda;
  Polynomial epsilon;  // in t
  Polynomial energy;   // E = 2 epsilon + j + 3/2, in t
};

/// lambda = (1 + j + 2mu + 2k(1 + 4mu))/2, epsilon = k - j/2 - 1/2 - t,
/// E = 2 epsilon + j + 3/2 = 2k + 1/2 - 2t.
ParameterMaps parameter_maps(const Rational& k, const Rational& j, const Rational& mu);

/// Coupled first-order system in xi, with constant coefficients for kappa
/// and epsilon:
///   [xi D - (eps - mu)] phi1 + kappa [xi D + xi + j + 1] phi2
///   kappa [D + 1] phi1 + [xi D - (eps + mu)] phi2
SpinorOperator ode_system_13(const Rational& j, const Rational& mu, const Polynomial& kappa, const Polynomial& epsilon);

/// Substitutes xi = kappa^2 (1 + x), phi1 = f1 + f2, phi2 = -f2/kappa, then
/// takes the row combinations (kappa row2 - row1, kappa row2). Throws
/// std::invalid_argument when kappa = 0.
SpinorOperator transform_13_to_16(const SpinorOperator& system_xi, const Rational& kappa);

/// The transformed system with the first bracket closed after (eps + t - mu):
///   [-x D + (eps + t - mu)] f1 + [-x D + 2 eps + 2t + 1 + j + t x] f2
///   [D + t] f1 + [-x D + (eps + t + mu)] f2
SpinorOperator printed_system_16(const Rational& j, const Rational& mu, const Polynomial& t, const Polynomial& epsilon);

struct SystemComparison {
  bool transform_matches_printed = false;
  bool ode_form_matches_printed = false;
  bool printed_L_matches_printed = false;
  std::string derived;
  std::string printed;
  std::string note;
};

/// Derives system 16 from system 13 at the given rational kappa and epsilon
/// and compares it with the printed reading. Also checks L - lambda (Ode and
/// Printed forms) against the printed system with epsilon = k - j/2 - 1/2 - t.
SystemComparison compare_ode_systems(const Rational& k, const Rational& j, const Rational& mu, const Rational& kappa,
                                     const Rational& epsilon);

}  // namespace jtqes
