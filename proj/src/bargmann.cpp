#include "jtqes/bargmann.hpp"

#include <sstream>
#include <stdexcept>

#include "jtqes/params.hpp"

namespace jtqes {

namespace {

Rational falling_factorial(long n, long r) {
  Rational out(1);
  for (long i = 0; i < r; ++i) out *= Rational(n - i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- XPolynomial

XPolynomial::XPolynomial(std::vector<Polynomial> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

XPolynomial XPolynomial::monomial(const Polynomial& c, std::size_t degree) {
  std::vector<Polynomial> v(degree + 1);
  v[degree] = c;
  return XPolynomial(std::move(v));
}

void XPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

XPolynomial& XPolynomial::operator*=(const Polynomial& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

XPolynomial XPolynomial::reduced_mod(const Polynomial& m) const {
  std::vector<Polynomial> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(divmod(c, m).remainder);
  return XPolynomial(std::move(out));
}

std::string XPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].to_string() << ")";
    if (i == 1) os << "*x";
    if (i > 1) os << "*x^" << i;
  }
  return os.str();
}

// --------------------------------------------------------------- ScalarDiffOp

ScalarDiffOp ScalarDiffOp::term(const Polynomial& c, int x_power, int d_power) {
  if (x_power < 0 || d_power < 0) throw std::invalid_argument("ScalarDiffOp: negative power");
  ScalarDiffOp op;
  op.add_term({x_power, d_power}, c);
  return op;
}

void ScalarDiffOp::add_term(const Key& key, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XPolynomial ScalarDiffOp::apply(const XPolynomial& f) const {
  std::vector<Polynomial> out;
  for (const auto& [key, c] : terms_) {
    const auto [a, b] = key;
    for (int n = b; n <= f.degree(); ++n) {
      const Polynomial& fn = f.coefficients()[static_cast<std::size_t>(n)];
      if (fn.is_zero()) continue;
      const auto target = static_cast<std::size_t>(n - b + a);
      if (out.size() <= target) out.resize(target + 1);
      out[target] += c * fn * falling_factorial(n, b);
    }
  }
  return XPolynomial(std::move(out));
}

ScalarDiffOp ScalarDiffOp::adjoint() const {
  ScalarDiffOp out;
  for (const auto& [key, c] : terms_) out.add_term({key.second, key.first}, c);
  return out;
}

ScalarDiffOp& ScalarDiffOp::operator+=(const ScalarDiffOp& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

ScalarDiffOp& ScalarDiffOp::operator-=(const ScalarDiffOp& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

ScalarDiffOp& ScalarDiffOp::operator*=(const Polynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

ScalarDiffOp operator*(const ScalarDiffOp& a, const ScalarDiffOp& b) {
  ScalarDiffOp out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const auto [xa, da] = ka;
      const auto [xb, db] = kb;
      const Polynomial c = ca * cb;
      for (int i = 0; i <= std::min(da, xb); ++i) {
        const Rational w = binomial(da, i) * falling_factorial(xb, i);
        out.add_term({xa + xb - i, da - i + db}, c * w);
      }
    }
  }
  return out;
}

std::string ScalarDiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (key.first == 1) os << "*x";
    if (key.first > 1) os << "*x^" << key.first;
    if (key.second == 1) os << "*D";
    if (key.second > 1) os << "*D^" << key.second;
  }
  return os.str();
}

// ------------------------------------------------------------- SpinorOperator

SpinorOperator SpinorOperator::from_entries(ScalarDiffOp uu, ScalarDiffOp ul, ScalarDiffOp lu, ScalarDiffOp ll) {
  SpinorOperator op;
  op.entries_ = {std::move(uu), std::move(ul), std::move(lu), std::move(ll)};
  return op;
}

SpinorOperator SpinorOperator::sigma_plus() { return from_entries({}, ScalarDiffOp::constant(1), {}, {}); }
SpinorOperator SpinorOperator::sigma_minus() { return from_entries({}, {}, ScalarDiffOp::constant(1), {}); }
SpinorOperator SpinorOperator::lower_projector() { return from_entries({}, {}, {}, ScalarDiffOp::constant(1)); }

PolynomialSpinor SpinorOperator::apply(const PolynomialSpinor& s) const {
  return {at(0, 0).apply(s.upper) + at(0, 1).apply(s.lower), at(1, 0).apply(s.upper) + at(1, 1).apply(s.lower)};
}

SpinorOperator SpinorOperator::adjoint() const {
  return from_entries(at(0, 0).adjoint(), at(1, 0).adjoint(), at(0, 1).adjoint(), at(1, 1).adjoint());
}

SpinorOperator& SpinorOperator::operator+=(const SpinorOperator& o) {
  for (std::size_t i = 0; i < 4; ++i) entries_[i] += o.entries_[i];
  return *this;
}

SpinorOperator& SpinorOperator::operator-=(const SpinorOperator& o) {
  for (std::size_t i = 0; i < 4; ++i) entries_[i] -= o.entries_[i];
  return *this;
}

SpinorOperator& SpinorOperator::operator*=(const Polynomial& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

SpinorOperator operator*(const SpinorOperator& a, const SpinorOperator& b) {
  SpinorOperator out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int m = 0; m < 2; ++m) out.at(r, c) += a.at(r, m) * b.at(m, c);
  return out;
}

std::string SpinorOperator::to_string() const {
  std::ostringstream os;
  os << "[[" << at(0, 0).to_string() << ", " << at(0, 1).to_string() << "], [" << at(1, 0).to_string() << ", "
     << at(1, 1).to_string() << "]]";
  return os.str();
}

SpinorOperator commutator(const SpinorOperator& a, const SpinorOperator& b) { return a * b - b * a; }
SpinorOperator anticommutator(const SpinorOperator& a, const SpinorOperator& b) { return a * b + b * a; }

PolynomialSpinor upper_monomial(int n) { return {XPolynomial::monomial(Polynomial(1), static_cast<std::size_t>(n)), {}}; }
PolynomialSpinor lower_monomial(int n) { return {{}, XPolynomial::monomial(Polynomial(1), static_cast<std::size_t>(n))}; }

bool equal_on_monomials(const SpinorOperator& a, const SpinorOperator& b, int max_degree) {
  for (int n = 0; n <= max_degree; ++n) {
    if (!(a.apply(upper_monomial(n)) == b.apply(upper_monomial(n)))) return false;
    if (!(a.apply(lower_monomial(n)) == b.apply(lower_monomial(n)))) return false;
  }
  return true;
}

// --------------------------------------------------------------- GeneratorSet

GeneratorSet::GeneratorSet(const Rational& k_, LoweringVariant variant) : k(k_) {
  two_k(k);
  const Polynomial kp(k);
  const Polynomial two_kp(k * Rational(2));
  const auto x = ScalarDiffOp::x();
  const auto d = ScalarDiffOp::d();
  const auto xd = ScalarDiffOp::term(Polynomial(1), 1, 1);
  const auto proj = SpinorOperator::lower_projector();

  J_plus = SpinorOperator::diagonal(x);
  J_minus = SpinorOperator::diagonal(ScalarDiffOp::term(Polynomial(1), 1, 2) - two_kp * d);
  J_minus += variant == LoweringVariant::Corrected ? proj * SpinorOperator::diagonal(d) : proj;
  J_zero = SpinorOperator::diagonal(xd - ScalarDiffOp::constant(kp)) + proj * Polynomial(Rational(1, 2));
  J = SpinorOperator::diagonal(ScalarDiffOp::constant(kp)) + proj * Polynomial(Rational(1, 2));

  const auto sp = SpinorOperator::sigma_plus();
  const auto sm = SpinorOperator::sigma_minus();
  Q1 = sm;
  Q2 = sm * SpinorOperator::diagonal(d);
  Qbar1 = sp * SpinorOperator::diagonal(ScalarDiffOp::constant(two_kp) - xd);
  Qbar2 = SpinorOperator::diagonal(x) * sp;
}

SpinorOperator GeneratorSet::N1_direct() const {
  return SpinorOperator::diagonal(ScalarDiffOp::constant(Polynomial(k * Rational(2))) -
                                  ScalarDiffOp::term(Polynomial(1), 1, 1));
}

SpinorOperator GeneratorSet::N2_direct() const {
  return SpinorOperator::diagonal(ScalarDiffOp::term(Polynomial(1), 1, 1)) + SpinorOperator::lower_projector();
}

bool AlgebraReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

AlgebraReport run_algebra_suite(const Rational& k, LoweringVariant variant) {
  const GeneratorSet g(k, variant);
  AlgebraReport report;
  report.k = k;
  report.max_degree = static_cast<int>(two_k(k)) + 3;
  const int cap = report.max_degree;
  const SpinorOperator zero;
  auto check = [&](std::string name, const SpinorOperator& lhs, const SpinorOperator& rhs) {
    report.results.push_back({std::move(name), equal_on_monomials(lhs, rhs, cap)});
  };

  check("[J+, J-] = -2 J0", commutator(g.J_plus, g.J_minus), g.J_zero * Polynomial(-2));
  check("[J0, J+] = J+", commutator(g.J_zero, g.J_plus), g.J_plus);
  check("[J0, J-] = -J-", commutator(g.J_zero, g.J_minus), g.J_minus * Polynomial(-1));

  const std::pair<const char*, const SpinorOperator*> odd[] = {
      {"Q1", &g.Q1}, {"Q2", &g.Q2}, {"Qbar1", &g.Qbar1}, {"Qbar2", &g.Qbar2}};
  for (int a = 0; a < 2; ++a)
    for (int b = a; b < 2; ++b) {
      check(std::string("{") + odd[a].first + ", " + odd[b].first + "} = 0",
            anticommutator(*odd[a].second, *odd[b].second), zero);
      check(std::string("{") + odd[a + 2].first + ", " + odd[b + 2].first + "} = 0",
            anticommutator(*odd[a + 2].second, *odd[b + 2].second), zero);
    }

  const SpinorOperator N1 = anticommutator(g.Q1, g.Qbar1);
  const SpinorOperator N2 = anticommutator(g.Q2, g.Qbar2);
  check("{Q1, Qbar1} = 2k - x D", N1, g.N1_direct());
  check("{Q2, Qbar2} = x D + sigma-sigma+", N2, g.N2_direct());

  check("[N1, Q1] = 0", commutator(N1, g.Q1), zero);
  check("[N1, Qbar1] = 0", commutator(N1, g.Qbar1), zero);
  check("[N1, Q2] = Q2", commutator(N1, g.Q2), g.Q2);
  check("[N1, Qbar2] = -Qbar2", commutator(N1, g.Qbar2), g.Qbar2 * Polynomial(-1));
  check("[N2, Q2] = 0", commutator(N2, g.Q2), zero);
  check("[N2, Qbar2] = 0", commutator(N2, g.Qbar2), zero);
  check("[N2, Q1] = Q1", commutator(N2, g.Q1), g.Q1);
  check("[N2, Qbar1] = -Qbar1", commutator(N2, g.Qbar1), g.Qbar1 * Polynomial(-1));
  return report;
}

// -------------------------------------------------------------- L and systems

SpinorOperator build_L(const Rational& k, const Rational& mu, LForm form) {
  const GeneratorSet g(k);
  const SpinorOperator N1 = anticommutator(g.Q1, g.Qbar1);
  const SpinorOperator N2 = anticommutator(g.Q2, g.Qbar2);
  const Polynomial two_mu(mu * Rational(2));
  const Polynomial one_plus(Rational(1) + mu * Rational(2));
  const SpinorOperator fermionic = (g.Q1 + g.Qbar2) * Polynomial::variable() + g.Q2 + g.Qbar1;
  switch (form) {
    case LForm::Printed:
      return N1 * two_mu + N2 * one_plus + fermionic;
    case LForm::Ode:
      return N1 * one_plus + N2 * two_mu + fermionic;
    case LForm::Qes:
      return (N1 * one_plus + N2 * two_mu + fermionic).adjoint();
  }
  throw std::invalid_argument("build_L: unknown form");
}

ParameterMaps parameter_maps(const Rational& k, const Rational& j, const Rational& mu) {
  ParameterMaps m;
  m.lambda = (Rational(1) + j + Rational(2) * mu + Rational(2) * k * (Rational(1) + Rational(4) * mu)) / Rational(2);
  m.epsilon = Polynomial(std::vector<Rational>{k - j / Rational(2) - Rational(1, 2), Rational(-1)});
  m.energy = m.epsilon * Rational(2) + Polynomial(j + Rational(3, 2));
  return m;
}

SpinorOperator ode_system_13(const Rational& j, const Rational& mu, const Polynomial& kappa, const Polynomial& epsilon) {
  const auto xd = ScalarDiffOp::term(Polynomial(1), 1, 1);
  const auto x = ScalarDiffOp::x();
  const auto d = ScalarDiffOp::d();
  const auto c = [](const Polynomial& p) { return ScalarDiffOp::constant(p); };
  return SpinorOperator::from_entries(xd - c(epsilon - Polynomial(mu)),
                                      kappa * (xd + x + c(Polynomial(j + Rational(1)))),
                                      kappa * (d + c(Polynomial(1))),
                                      xd - c(epsilon + Polynomial(mu)));
}

SpinorOperator transform_13_to_16(const SpinorOperator& system_xi, const Rational& kappa) {
  if (kappa.is_zero()) throw std::invalid_argument("transform_13_to_16: kappa = 0 makes the substitution singular");
  const Rational t = kappa * kappa;
  // xi^a D_xi^b -> t^(a-b) (1+x)^a D_x^b
  auto substitute = [&](const ScalarDiffOp& op) {
    ScalarDiffOp out;
    for (const auto& [key, c] : op.terms()) {
      const auto [a, b] = key;
      Rational scale(1);
      for (int i = 0; i < a; ++i) scale *= t;
      for (int i = 0; i < b; ++i) scale /= t;
      for (int i = 0; i <= a; ++i) out += ScalarDiffOp::term(c * (scale * binomial(a, i)), i, b);
    }
    return out;
  };
  SpinorOperator in_x;
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 2; ++col) in_x.at(r, col) = substitute(system_xi.at(r, col));
  const auto c = [](const Rational& v) { return ScalarDiffOp::constant(Polynomial(v)); };
  // (phi1, phi2) = M (f1, f2) with M = [[1, 1], [0, -1/kappa]]
  const SpinorOperator change = SpinorOperator::from_entries(c(1), c(1), {}, c(-kappa.inverse()));
  // rows: (kappa row2 - row1, kappa row2)
  const SpinorOperator rows = SpinorOperator::from_entries(c(-1), c(kappa), {}, c(kappa));
  return rows * in_x * change;
}

SpinorOperator printed_system_16(const Rational& j, const Rational& mu, const Polynomial& t, const Polynomial& epsilon) {
  const auto xd = ScalarDiffOp::term(Polynomial(1), 1, 1);
  const auto c = [](const Polynomial& p) { return ScalarDiffOp::constant(p); };
  return SpinorOperator::from_entries(
      c(epsilon + t - Polynomial(mu)) - xd,
      c(epsilon * Rational(2) + t * Rational(2) + Polynomial(Rational(1) + j)) - xd + t * ScalarDiffOp::x(),
      ScalarDiffOp::d() + c(t), c(epsilon + t + Polynomial(mu)) - xd);
}

SystemComparison compare_ode_systems(const Rational& k, const Rational& j, const Rational& mu, const Rational& kappa,
                                     const Rational& epsilon) {
  SystemComparison out;
  const Rational t = kappa * kappa;
  const auto derived = transform_13_to_16(ode_system_13(j, mu, Polynomial(kappa), Polynomial(epsilon)), kappa);
  const auto printed = printed_system_16(j, mu, Polynomial(t), Polynomial(epsilon));
  out.derived = derived.to_string();
  out.printed = printed.to_string();
  out.transform_matches_printed = derived == printed;

  const auto maps = parameter_maps(k, j, mu);
  const auto printed_t = printed_system_16(j, mu, Polynomial::variable(), maps.epsilon);
  const auto shift = SpinorOperator::diagonal(ScalarDiffOp::constant(Polynomial(maps.lambda)));
  out.ode_form_matches_printed = build_L(k, mu, LForm::Ode) - shift == printed_t;
  out.printed_L_matches_printed = build_L(k, mu, LForm::Printed) - shift == printed_t;
  out.note =
      "system 16 derived as (kappa*row2 - row1, kappa*row2) of the substituted system 13; "
      "the first bracket is read as [-x D + (eps + t - mu)] f1";
  return out;
}

}  // namespace jtqes
