#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "jtqes/fock_oracle.hpp"
#include "jtqes/poly_matrix.hpp"
#include "jtqes/polynomial.hpp"
#include "jtqes/qes_solver.hpp"
#include "jtqes/quotient.hpp"
#include "jtqes/roots.hpp"
#include "jtqes/symmetric_eigen.hpp"

using namespace jtqes;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

const Polynomial t = Polynomial::variable();

Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(num(rng), den(rng));
  return Polynomial(c);
}

// Leibniz expansion over all permutations.
Polynomial leibniz(const PolyMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inversions;
    Polynomial term(1);
    for (std::size_t r = 0; r < perm.size(); ++r) term *= m(r, perm[r]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse("6/-4"), std::invalid_argument);
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("0.6") == Rational(3, 5));
  CHECK(Rational::parse("7").to_string() == "7/1");
  CHECK(Rational(-2, 4).to_string() == "-1/2");
  CHECK(Rational(-2, 4).to_short_string() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(3, 2).is_half_integer_multiple());
  CHECK_FALSE(Rational(1, 3).is_half_integer_multiple());
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(2, 5) == Rational(0));
  CHECK(factorial(6) == Rational(720));
}

TEST_CASE("poly_arith examples") {
  CHECK(poly_arith(t + Polynomial(1), t - Polynomial(1), PolyOp::Mul) == t * t - Polynomial(1));
  const Polynomial p = P({3, 0, -2, 5});
  CHECK(poly_arith(p, Polynomial(), PolyOp::Add) == p);
  CHECK(poly_arith(t * Rational(2), Polynomial(Rational(1, 2)), PolyOp::Mul) == t);
  CHECK(Polynomial().degree() == -1);
  CHECK((p - p).is_zero());
}

TEST_CASE("polynomial ring properties on random inputs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = random_poly(rng, 8), b = random_poly(rng, 8);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK((a + b) - b == a);
    if (!b.is_zero()) {
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("gcd, extended gcd and squarefree decomposition") {
  const Polynomial a = (t - Polynomial(1)) * (t - Polynomial(2)) * (t - Polynomial(2));
  const Polynomial b = (t - Polynomial(2)) * (t + Polynomial(5));
  CHECK(gcd(a, b) == t - Polynomial(2));
  const auto e = extended_gcd(a, b);
  CHECK(e.s * a + e.u * b == e.gcd);
  const auto sq = squarefree_decomposition(a * Rational(3));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].first == t - Polynomial(1));
  CHECK(sq[0].second == 1);
  CHECK(sq[1].first == t - Polynomial(2));
  CHECK(sq[1].second == 2);
  CHECK(squarefree_part(a) == (t - Polynomial(1)) * (t - Polynomial(2)));
  CHECK(compose(t * t + Polynomial(1), t + Polynomial(1)) == t * t + t * Rational(2) + Polynomial(2));
  CHECK_THROWS_AS(exact_divide(t * t + Polynomial(1), t), std::logic_error);
}

TEST_CASE("banded_determinant examples") {
  PolyMatrix one(1, 1);
  one(0, 0) = P({4, 1});
  CHECK(banded_determinant(one, 0) == P({4, 1}));

  const Rational a(3, 2), b(-5, 7);
  PolyMatrix two(2, 2);
  two(0, 0) = Polynomial(a);
  two(0, 1) = t;
  two(1, 0) = Polynomial(1);
  two(1, 1) = Polynomial(b);
  CHECK(banded_determinant(two, 1) == Polynomial(a * b) - t);

  const Rational eta(7, 3), rho(-2, 5);
  const auto m = eta_rho_map(eta, rho);
  CHECK(determinant_polynomial(build_recurrence_matrix(Rational(0), m.j, m.mu)) == Polynomial(eta / Rational(2)));

  CHECK_THROWS_AS(banded_determinant(PolyMatrix(2, 3), 1), std::invalid_argument);
  PolyMatrix wide(3, 3);
  wide(0, 2) = Polynomial(1);
  CHECK_THROWS_AS(banded_determinant(wide, 1), std::invalid_argument);
}

TEST_CASE("banded_determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      PolyMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, 2);
      CHECK(banded_determinant(m, n) == leibniz(m));
    }
    PolyMatrix tri(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = (r ? r - 1 : 0); c < std::min(n, r + 2); ++c) tri(r, c) = random_poly(rng, 2);
    CHECK(banded_determinant(tri, 1) == leibniz(tri));
  }
  PolyMatrix zero_pivot(3, 3);
  zero_pivot(0, 1) = Polynomial(1);
  zero_pivot(1, 0) = Polynomial(1);
  zero_pivot(2, 2) = t;
  CHECK(banded_determinant(zero_pivot, 2) == -t);
}

TEST_CASE("isolate_real_roots examples") {
  auto r = isolate_real_roots(t * t - Polynomial(2), Rational(0), Rational(10));
  REQUIRE(r.size() == 1);
  CHECK(r[0].lower >= Rational(1));
  CHECK(r[0].upper <= Rational(2));
  CHECK(isolate_real_roots(t * t + Polynomial(1), Rational(-10), Rational(10)).empty());
  const Polynomial dbl = (t - Polynomial(3)) * (t - Polynomial(3));
  r = isolate_real_roots(dbl, Rational(0), Rational(10));
  REQUIRE(r.size() == 1);
  CHECK(r[0].lower <= Rational(3));
  CHECK(r[0].upper >= Rational(3));
  CHECK(r[0].multiplicity_hint == 2);
  CHECK_THROWS_AS(isolate_real_roots(Polynomial(), Rational(0), Rational(1)), std::domain_error);
  r = isolate_real_roots(t * (t - Polynomial(1)), Rational(0), Rational(1));
  REQUIRE(r.size() == 2);
  CHECK(r[0].is_exact());
  CHECK(r[1].is_exact());
}

TEST_CASE("root isolation on random products of distinct linear factors") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> roots;
    while (roots.size() < 5) {
      Rational x(num(rng), den(rng));
      if (std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    Polynomial p(Rational(trial + 1, 3));
    for (const auto& x : roots) p *= Polynomial(std::vector<Rational>{-x, Rational(1)});
    const auto enc = isolate_real_roots(p, Rational(-50), Rational(50));
    REQUIRE(enc.size() == roots.size());
    const SturmSequence s(squarefree_part(p));
    CHECK(s.count(Rational(-50), Rational(50)) == static_cast<int>(roots.size()));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(enc[i].lower <= roots[i]);
      CHECK(roots[i] <= enc[i].upper);
      for (std::size_t o = 0; o < roots.size(); ++o)
        if (o != i) CHECK_FALSE((enc[i].lower <= roots[o] && roots[o] <= enc[i].upper));
    }
  }
}

TEST_CASE("refine_enclosure") {
  const Polynomial p = t * t - Polynomial(2);
  const auto e = refine_enclosure(p, {Rational(1), Rational(2)}, Rational(1, 1000));
  CHECK(e.width() <= Rational(1, 1000));
  CHECK(p.sign_at(e.lower) < 0);
  CHECK(p.sign_at(e.upper) > 0);
  const auto exact = refine_enclosure(t - Polynomial(Rational(1, 2)), {Rational(0), Rational(1)}, Rational(1, 10));
  CHECK(exact.is_exact());
  CHECK(exact.lower == Rational(1, 2));
  CHECK_THROWS_AS(refine_enclosure(p, {Rational(2), Rational(3)}, Rational(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(refine_enclosure(p, {Rational(1), Rational(2)}, Rational(0)), std::invalid_argument);

  // P2 at eta = 3, rho = 1: determinant -3t + 2, root 2/3
  const auto m = eta_rho_map(Rational(3), Rational(1));
  const Polynomial det = determinant_polynomial(build_recurrence_matrix(Rational(1, 2), m.j, m.mu));
  CHECK(det == P({2, -3}));
  const auto roots = isolate_real_roots(det, Rational(0), Rational(10));
  REQUIRE(roots.size() == 1);
  const auto fine = roots[0].is_exact() ? roots[0] : refine_enclosure(det, roots[0], Rational(1, 1000000));
  CHECK(fine.lower <= Rational(2, 3));
  CHECK(Rational(2, 3) <= fine.upper);
}

TEST_CASE("quotient_ops examples") {
  const Polynomial mod = t * t - Polynomial(2);
  const auto x = QuotientElement::make(t, mod);
  CHECK(quotient_ops(x, x, QuotientOp::Mul).representative() == Polynomial(2));
  CHECK(quotient_ops(x, x, QuotientOp::Inv).representative() == t * Rational(1, 2));
  const auto zero = QuotientElement::make(Polynomial(), mod);
  CHECK(quotient_ops(zero, x, QuotientOp::Add) == x);
  CHECK_THROWS_AS(QuotientElement::make(t, t * t) * QuotientElement::make(t, t * t - Polynomial(1)),
                  std::invalid_argument);
  try {
    QuotientElement::make(t - Polynomial(1), (t - Polynomial(1)) * (t + Polynomial(3))).inverse();
    FAIL("expected NotInvertible");
  } catch (const NotInvertible& e) {
    CHECK(e.factor() == t - Polynomial(1));
  }
}

TEST_CASE("quotient inverse property") {
  std::mt19937_64 rng(17);
  const Polynomial mod = t * t * t - t * Rational(3) + Polynomial(Rational(1, 2));
  for (int i = 0; i < 50; ++i) {
    const auto a = QuotientElement::make(random_poly(rng, 4), mod);
    if (a.is_zero()) continue;
    CHECK((a * a.inverse()).representative() == Polynomial(1));
  }
}

TEST_CASE("symmetric_eigen examples") {
  SymmetricMatrix m(2);
  m.set(0, 0, 2);
  m.set(1, 1, 2);
  m.set(0, 1, 1);
  const auto e = symmetric_eigen(m);
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-14));

  SymmetricMatrix d(4);
  const double diag[] = {3.0, -1.0, 7.5, 0.25};
  for (std::size_t i = 0; i < 4; ++i) d.set(i, i, diag[i]);
  const auto ed = symmetric_eigen(d);
  CHECK(ed.values == std::vector<double>{-1.0, 0.25, 3.0, 7.5});

  SectorParams p{Rational(0), Rational(0), 0.0, Rational(0)};
  const auto h = build_sector_hamiltonian(p, 24);
  REQUIRE(h.dimension() == 50);
  const auto eh = symmetric_eigen(h);
  std::vector<double> expected;
  for (std::size_t i = 0; i < 50; ++i) expected.push_back(h(i, i));
  std::sort(expected.begin(), expected.end());
  CHECK(eh.values == expected);

  SymmetricMatrix bad(2);
  bad.set(0, 1, std::nan(""));
  CHECK_THROWS_AS(symmetric_eigen(bad), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_eigen(m, 0.0), std::invalid_argument);
}

TEST_CASE("symmetric_eigen orthonormality, trace and reconstruction") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::size_t n : {3u, 10u, 40u}) {
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) m.set(i, j, u(rng));
    const double tol = 1e-12;
    const auto e = symmetric_eigen(m, tol);
    double trace = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += m(i, i);
      sum += e.values[i];
    }
    CHECK(std::abs(trace - sum) <= 1e-10 * std::max(1.0, std::abs(trace)));
    double worst_orth = 0.0, worst_res = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      const auto va = e.vector(a);
      for (std::size_t b = 0; b < n; ++b) {
        const auto vb = e.vector(b);
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += va[i] * vb[i];
        worst_orth = std::max(worst_orth, std::abs(dot - (a == b ? 1.0 : 0.0)));
      }
      const auto mv = m.multiply(va);
      double r = 0.0;
      for (std::size_t i = 0; i < n; ++i) r += (mv[i] - e.values[a] * va[i]) * (mv[i] - e.values[a] * va[i]);
      worst_res = std::max(worst_res, std::sqrt(r));
    }
    CHECK(worst_orth < 1e-10);
    CHECK(worst_res <= 10 * tol * m.frobenius_norm() * std::sqrt(static_cast<double>(n)));
    CHECK(std::is_sorted(e.values.begin(), e.values.end()));
  }
}
