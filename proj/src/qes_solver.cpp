#include "jtqes/qes_solver.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "jtqes/quotient.hpp"

namespace jtqes {

namespace {

Rational half(const Rational& r) { return r / Rational(2); }

std::size_t omega_index(long n) { return static_cast<std::size_t>(2 * n); }
std::size_t v_index(long n) { return static_cast<std::size_t>(2 * n - 1); }  // v_n, n >= 1

}  // namespace

RecurrenceSystem build_recurrence_matrix(const Rational& k, const Rational& j, const Rational& mu_rec) {
  const long tk = two_k(k);
  RecurrenceSystem r{k, j, mu_rec, static_cast<int>(2 * tk + 1), PolyMatrix(2 * tk + 1, 2 * tk + 1), {}};
  const Polynomial t = Polynomial::variable();
  for (long n = 0; n <= tk; ++n) {
    const std::size_t row = omega_index(n);
    const Rational base = k - half(Rational(2 * n + 1) + j);
    if (n > 0) r.matrix(row, v_index(n)) = Polynomial(Rational(n));
    r.matrix(row, row) = Polynomial(base + mu_rec);
    if (n < tk) r.matrix(row, v_index(n + 1)) = t;
    r.labels.push_back("w" + std::to_string(n));
    if (n == tk) break;
    const std::size_t row_b = row + 1;
    r.matrix(row_b, omega_index(n)) = Polynomial(Rational(tk - n));
    r.matrix(row_b, row_b) = Polynomial(base - mu_rec);
    r.matrix(row_b, omega_index(n + 1)) = t;
    r.labels.push_back("v" + std::to_string(n + 1));
  }
  return r;
}

Polynomial determinant_polynomial(const RecurrenceSystem& r) { return banded_determinant(r.matrix, 1); }

PolyMatrix operator_matrix(const Rational& k, const Rational& j, const Rational& mu_rec) {
  const long tk = two_k(k);
  const Rational mu = hamiltonian_mu(mu_rec);
  const SpinorOperator L = build_L(k, mu, LForm::Qes);
  const Rational lambda = parameter_maps(k, j, mu).lambda;
  const auto d = static_cast<std::size_t>(2 * tk + 1);
  PolyMatrix m(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    const long n = static_cast<long>(col / 2);
    const Polynomial scale(factorial(static_cast<unsigned>(n)).inverse());
    PolynomialSpinor basis;
    if (col % 2 == 0)
      basis.upper = XPolynomial::monomial(scale, static_cast<std::size_t>(n));
    else
      basis.lower = XPolynomial::monomial(scale, static_cast<std::size_t>(n));
    PolynomialSpinor image = L.apply(basis);
    image.upper -= basis.upper * Polynomial(lambda);
    image.lower -= basis.lower * Polynomial(lambda);
    if (!image.in_space(static_cast<int>(tk), static_cast<int>(tk) - 1))
      throw std::logic_error("operator_matrix: L leaves P_{2k,2k-1}");
    for (int p = 0; p <= image.upper.degree(); ++p)
      m(omega_index(p), col) = image.upper.coeff(static_cast<std::size_t>(p)) * factorial(static_cast<unsigned>(p));
    for (int p = 0; p <= image.lower.degree(); ++p)
      m(v_index(p + 1), col) = image.lower.coeff(static_cast<std::size_t>(p)) * factorial(static_cast<unsigned>(p));
  }
  return m;
}

ClosureReport check_closure(const Rational& k, const Rational& mu, int upper_degree, int lower_degree) {
  const SpinorOperator L = build_L(k, mu, LForm::Qes);
  ClosureReport rep{upper_degree, lower_degree, true};
  for (int n = 0; n <= upper_degree && rep.preserved; ++n)
    rep.preserved = L.apply(upper_monomial(n)).in_space(upper_degree, lower_degree);
  for (int n = 0; n <= lower_degree && rep.preserved; ++n)
    rep.preserved = L.apply(lower_monomial(n)).in_space(upper_degree, lower_degree);
  return rep;
}

// ------------------------------------------------------------- printed P_n

EtaRhoMap eta_rho_map(const Rational& eta, const Rational& rho) {
  return {-(eta + rho + Rational(2)) / Rational(2), (eta - rho) / Rational(4)};
}

Polynomial printed_polynomial(const Rational& k, const Rational& eta, const Rational& rho, P3Reading reading) {
  const Rational one(1);
  if (k == Rational(0)) return Polynomial(eta);
  if (k == Rational(1, 2)) return Polynomial(std::vector<Rational>{-(rho + one) * (eta * eta - one), Rational(8) * eta});
  if (k == Rational(1)) {
    const Rational lead = Rational(128) * eta;
    const Rational middle = -Rational(8) * (eta * (Rational(3) * eta * (rho + one) - Rational(4)) - Rational(4) * (rho + one));
    const Rational constant = eta * rho * (rho + Rational(2)) * (eta * eta - Rational(4));
    if (reading == P3Reading::Literal) return Polynomial(std::vector<Rational>{constant, lead + middle});
    return Polynomial(std::vector<Rational>{constant, middle, lead});
  }
  throw std::invalid_argument("printed_polynomial: only k = 0, 1/2, 1 are listed");
}

ComparisonReport compare_with_printed(const Rational& k, P3Reading reading, int draws, std::uint64_t seed,
                                      std::optional<std::pair<Rational, Rational>> fixed) {
  if (!(k == Rational(0) || k == Rational(1, 2) || k == Rational(1)))
    throw std::invalid_argument("compare_with_printed: k must be 0, 1/2 or 1");
  ComparisonReport rep;
  rep.k = k;
  rep.reading = reading;

  std::vector<std::pair<Rational, Rational>> points;
  if (fixed) points.push_back(*fixed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-24, 24), den(1, 9);
  while (static_cast<int>(points.size()) < draws + (fixed ? 1 : 0)) {
    Rational eta(num(rng), den(rng)), rho(num(rng), den(rng));
    if (printed_polynomial(k, eta, rho, reading).is_zero()) continue;
    points.emplace_back(eta, rho);
  }

  rep.match = true;
  for (const auto& [eta, rho] : points) {
    const auto map = eta_rho_map(eta, rho);
    ComparisonDraw d{eta, rho, determinant_polynomial(build_recurrence_matrix(k, map.j, map.mu)),
                     printed_polynomial(k, eta, rho, reading), false, std::nullopt, {}};
    if (d.determinant.is_zero() || d.printed.is_zero()) {
      d.proportional = d.determinant.is_zero() && d.printed.is_zero();
    } else {
      const Rational c = d.determinant.leading() / d.printed.leading();
      d.proportional = d.determinant == d.printed * c;
      d.difference = d.printed - d.determinant * c.inverse();
      if (d.proportional) d.constant = c;
    }
    if (!d.proportional) rep.match = false;
    if (d.constant) {
      if (!rep.constant) rep.constant = d.constant;
      else if (!(*rep.constant == *d.constant)) rep.match = false;
    }
    rep.draws.push_back(std::move(d));
  }
  if (!rep.match) rep.constant.reset();
  return rep;
}

// ----------------------------------------------------------- Juddian points

std::vector<Polynomial> null_vector(const RecurrenceSystem& r, const Polynomial& modulus) {
  if (modulus.coeff(0).is_zero()) throw std::invalid_argument("null_vector: t is not invertible modulo the factor");
  auto mod = std::make_shared<const Polynomial>(modulus);
  auto q = [&](const Polynomial& p) { return QuotientElement(p, mod); };
  const QuotientElement t_inv = q(Polynomial::variable()).inverse();
  const auto d = static_cast<std::size_t>(r.order);
  std::vector<QuotientElement> x(d, q(Polynomial()));
  x[0] = q(Polynomial(1));
  for (std::size_t row = 0; row + 1 < d; ++row) {
    QuotientElement acc = q(Polynomial());
    if (row > 0) acc = acc + q(r.matrix(row, row - 1)) * x[row - 1];
    acc = acc + q(r.matrix(row, row)) * x[row];
    x[row + 1] = -(acc * t_inv);
  }
  std::vector<Polynomial> out;
  out.reserve(d);
  for (const auto& e : x) out.push_back(e.representative());
  return out;
}

namespace {

PolynomialSpinor spinor_from(const std::vector<Polynomial>& c) {
  std::vector<Polynomial> up, low;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Polynomial scaled = c[i] * factorial(static_cast<unsigned>(i / 2)).inverse();
    (i % 2 == 0 ? up : low).push_back(scaled);
  }
  return {XPolynomial(std::move(up)), XPolynomial(std::move(low))};
}

}  // namespace

bool exact_eigencheck(const std::vector<Polynomial>& coefficients, const Rational& k, const Rational& j,
                      const Rational& mu, const Polynomial& modulus) {
  const long tk = two_k(k);
  if (coefficients.size() != static_cast<std::size_t>(2 * tk + 1)) return false;
  const PolynomialSpinor s = spinor_from(coefficients).reduced_mod(modulus);
  if (s.upper.is_zero() && s.lower.is_zero()) return false;
  if (!s.in_space(static_cast<int>(tk), static_cast<int>(tk) - 1)) return false;
  const Polynomial lambda(parameter_maps(k, j, mu).lambda);
  PolynomialSpinor lhs = build_L(k, mu, LForm::Qes).apply(s);
  lhs.upper -= s.upper * lambda;
  lhs.lower -= s.lower * lambda;
  const PolynomialSpinor rem = lhs.reduced_mod(modulus);
  return rem.upper.is_zero() && rem.lower.is_zero();
}

bool exact_eigencheck(const JuddianPoint& p) { return exact_eigencheck(p.coefficients, p.k, p.j, p.mu, p.factor); }

bool series_identity_check(const std::vector<Polynomial>& coefficients, const Rational& k, const Rational& j,
                           const Rational& mu, const Polynomial& modulus) {
  const long tk = two_k(k);
  if (coefficients.size() != static_cast<std::size_t>(2 * tk + 1)) return false;
  auto mod = std::make_shared<const Polynomial>(modulus);
  auto q = [&](const Polynomial& p) { return QuotientElement(p, mod); };
  auto w = [&](long n) { return n <= tk ? coefficients[omega_index(n)] : Polynomial(); };
  auto v = [&](long n) { return n >= 1 && n <= tk ? coefficients[v_index(n)] : Polynomial(); };
  auto Q = [&](long m) {
    Polynomial s;
    for (long n = 0; n <= std::min(m, tk); ++n) s += w(n) * binomial(m, n);
    return q(s);
  };
  auto R = [&](long m) {
    Polynomial s;
    for (long n = 0; n <= std::min(m, tk); ++n) s -= (w(n) + v(n + 1)) * binomial(m, n);
    return q(s);
  };
  const QuotientElement t = q(Polynomial::variable());
  const QuotientElement eps = q(parameter_maps(k, j, mu).epsilon);
  auto c = [&](const Rational& r) { return q(Polynomial(r)); };
  for (long m = 0; m <= tk + 2; ++m) {
    QuotientElement first = (c(Rational(m) + mu) - eps) * Q(m) + t * R(m);
    if (m > 0) first = first + c(Rational(m)) * R(m - 1);
    const QuotientElement second = t * Q(m + 1) + c(Rational(m) + j + Rational(1)) * Q(m) + (c(Rational(m) - mu) - eps) * R(m);
    if (!first.is_zero() || !second.is_zero()) return false;
  }
  return true;
}

std::vector<FactorCheck> eigencheck_all_factors(const Rational& k, const Rational& j, const Rational& mu_rec) {
  const RecurrenceSystem r = build_recurrence_matrix(k, j, mu_rec);
  Polynomial det = determinant_polynomial(r);
  std::vector<FactorCheck> out;
  if (det.is_zero()) return out;
  auto c = det.coefficients();
  while (c.front().is_zero()) c.erase(c.begin());
  det = Polynomial(std::move(c));
  for (const auto& [f, mult] : squarefree_decomposition(det)) {
    if (f.degree() < 1) continue;
    out.push_back({f, exact_eigencheck(null_vector(r, f), k, j, hamiltonian_mu(mu_rec), f)});
  }
  return out;
}

double JuddianPoint::kappa() const { return std::sqrt(kappa_sq_value); }

PolynomialSpinor JuddianPoint::spinor() const { return spinor_from(coefficients); }

std::vector<double> reconstruct_fock_state(const JuddianPoint& point, int truncation) {
  if (!point.j.is_integer() || point.j.sign() < 0)
    throw std::invalid_argument("reconstruct_fock_state: sector j must be an integer >= 0");
  if (!(point.kappa_sq.lower.sign() > 0)) throw std::invalid_argument("reconstruct_fock_state: kappa enclosure contains 0");
  if (truncation < 1) throw std::invalid_argument("reconstruct_fock_state: truncation must be >= 1");
  const double t = point.kappa_sq_value;
  const double kappa = std::sqrt(t);
  const double j = point.j.to_double();
  const long tk = two_k(point.k);
  std::vector<double> w, vv;
  for (long n = 0; n <= tk; ++n) {
    w.push_back(point.coefficients[omega_index(n)].evaluate(t));
    vv.push_back(n < tk ? point.coefficients[v_index(n + 1)].evaluate(t) : 0.0);
  }
  std::vector<double> state(static_cast<std::size_t>(2 * (truncation + 1)));
  for (int m = 0; m <= truncation; ++m) {
    double qm = 0.0, rm = 0.0;
    for (long n = 0; n <= std::min<long>(m, tk); ++n) {
      const double c = std::exp(std::lgamma(m + 1.0) - std::lgamma(n + 1.0) - std::lgamma(m - n + 1.0));
      qm += w[static_cast<std::size_t>(n)] * c;
      rm -= (w[static_cast<std::size_t>(n)] + vv[static_cast<std::size_t>(n)]) * c;
    }
    const double log_t = m * std::log(t);
    const double up_w = std::exp(log_t - 0.5 * (std::lgamma(m + 1.0) + std::lgamma(m + j + 1.0)));
    const double down_w = std::exp(log_t - 0.5 * (std::lgamma(m + 1.0) + std::lgamma(m + j + 2.0)));
    state[static_cast<std::size_t>(2 * m)] = up_w * qm;
    state[static_cast<std::size_t>(2 * m + 1)] = kappa * down_w * rm;
  }
  return state;
}

namespace {

std::pair<int, Polynomial> strip_t(const Polynomial& p) {
  int power = 0;
  auto c = p.coefficients();
  while (!c.empty() && c.front().is_zero()) {
    c.erase(c.begin());
    ++power;
  }
  return {power, Polynomial(std::move(c))};
}

void run_oracle(JuddianPoint& pt, const JuddianSettings& settings) {
  OracleValidation& o = pt.oracle;
  SectorParams direct{pt.j, pt.mu, pt.kappa(), pt.k};
  auto sector = realizable_analogue(direct);
  if (!sector) {
    o.note = "sector j = " + pt.j.to_short_string() + " has no realizable analogue; exact check only";
    return;
  }
  o.performed = true;
  o.via_analogue = !direct.realizable_sector();
  o.sector = *sector;
  int window = 8 + 4 * static_cast<int>(two_k(pt.k));
  SpectrumReport report;
  for (;;) {
    report = converged_spectrum(*sector, window, settings.oracle_tol);
    if (report.eigenvalues.back() > pt.energy + 0.5 || window >= 512) break;
    window *= 2;
  }
  const EnergyMatch match = contains_energy(report, pt.energy, 1e-6);
  o.energy_found = match.found;
  o.nearest = match.nearest;
  o.distance = match.distance;
  o.truncation_used = report.truncation_used;
  if (o.via_analogue) {
    o.note = "validated in the mirror sector j' = " + sector->j.to_short_string() + ", mu' = " +
             sector->mu.to_short_string();
    return;
  }
  const double t = pt.kappa_sq_value;
  const int n = std::max(settings.min_truncation, static_cast<int>(2.0 * t + 10.0 * std::sqrt(t) + 30.0));
  o.residual = residual_norm(reconstruct_fock_state(pt, n), *sector, n, pt.energy);
  o.residual_truncation = n;
}

}  // namespace

JuddianResult juddian_points(const Rational& k, const Rational& j, const Rational& mu, const JuddianSettings& settings) {
  two_k(k);
  if (!(settings.kappa_max.sign() > 0)) throw std::invalid_argument("juddian_points: kappa_max must be positive");
  if (!(settings.tol.sign() > 0)) throw std::invalid_argument("juddian_points: tol must be positive");
  JuddianResult res;
  const Rational mu_rec = recurrence_mu(mu);
  res.system = build_recurrence_matrix(k, j, mu_rec);
  res.determinant = determinant_polynomial(res.system);
  if (res.determinant.is_zero()) {
    throw DegenerateDeterminant("determinant vanishes identically for k=" + k.to_short_string() + ", j=" +
                                j.to_short_string() + ", mu=" + mu.to_short_string() +
                                ": the baseline E = 2k + 1/2 - 2 kappa^2 is exact for every kappa");
  }
  std::tie(res.t_power, res.reduced) = strip_t(res.determinant);
  if (res.reduced.degree() == 0) {
    res.baseline_condition = true;
    res.note = "determinant has no roots with kappa > 0 (reduced determinant " + res.reduced.to_string() + ")";
    return res;
  }

  const Rational t_max = settings.kappa_max * settings.kappa_max;
  const Rational numeric_tol = std::min(settings.tol, Rational(1, 1000000000000000000L));
  const ParameterMaps maps = parameter_maps(k, j, mu);
  for (const auto& [factor, mult] : squarefree_decomposition(res.reduced)) {
    if (factor.degree() < 1) continue;
    for (auto enc : isolate_real_roots(factor, Rational(0), t_max)) {
      if (enc.upper.sign() <= 0) continue;
      if (factor.degree() == 1) enc.lower = enc.upper = -factor.coeff(0) / factor.coeff(1);
      JuddianPoint pt;
      pt.k = k;
      pt.j = j;
      pt.mu = mu;
      pt.mu_rec = mu_rec;
      pt.factor = factor;
      pt.multiplicity = mult;
      pt.lambda = maps.lambda;
      const RootEnclosure fine = enc.is_exact() ? enc : refine_enclosure(factor, enc, numeric_tol);
      pt.kappa_sq = enc.is_exact() ? enc : refine_enclosure(factor, enc, settings.tol);
      pt.kappa_sq.multiplicity_hint = mult;
      pt.kappa_sq_value = fine.midpoint_double();
      pt.kappa_lower = std::nextafter(std::sqrt(pt.kappa_sq.lower.to_double()), 0.0);
      pt.kappa_upper = std::nextafter(std::sqrt(pt.kappa_sq.upper.to_double()), 1e300);
      pt.energy_lower = maps.energy.evaluate(pt.kappa_sq.upper);
      pt.energy_upper = maps.energy.evaluate(pt.kappa_sq.lower);
      pt.energy = maps.energy.evaluate(pt.kappa_sq_value);
      pt.coefficients = null_vector(res.system, factor);
      pt.exact_eigencheck = exact_eigencheck(pt);
      pt.series_check = series_identity_check(pt.coefficients, k, j, mu, factor);
      if (settings.run_oracle) run_oracle(pt, settings);
      res.points.push_back(std::move(pt));
    }
  }
  std::sort(res.points.begin(), res.points.end(),
            [](const JuddianPoint& a, const JuddianPoint& b) { return a.kappa_sq.lower < b.kappa_sq.lower; });
  if (res.points.empty()) res.note = "no determinant roots with 0 < kappa <= " + settings.kappa_max.to_short_string();
  return res;
}

}  // namespace jtqes
