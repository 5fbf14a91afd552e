// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jtqes/bargmann.hpp"
#include "jtqes/fock_oracle.hpp"
#include "jtqes/qes_solver.hpp"
#include "jtqes/systems_catalog.hpp"

using namespace jtqes;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  return Rational(num(rng), den(rng));
}

Outcome algebra_suite() {
  int relations = 0;
  for (int twok = 0; twok <= 4; ++twok) {
    const auto r = run_algebra_suite(Rational(twok, 2));
    for (const auto& x : r.results) {
      if (!x.passed) return {false, "k=" + r.k.to_short_string() + " fails " + x.relation};
      ++relations;
    }
  }
  return {true, std::to_string(relations) + " relations exact, 2k = 0..4"};
}

Outcome qes_closure() {
  bool top_space_leaks = true;
  std::mt19937_64 rng(2);
  for (int twok = 0; twok <= 4; ++twok) {
    for (int i = 0; i < 5; ++i) {
      const Rational mu = random_rational(rng);
      if (!check_closure(Rational(twok, 2), mu, twok, twok - 1).preserved)
        return {false, "P_{2k,2k-1} not preserved at 2k=" + std::to_string(twok)};
      if (twok > 0) top_space_leaks &= !check_closure(Rational(twok, 2), mu, twok + 1, twok).preserved;
    }
  }
  return {true, std::string("L maps P_{n+1,n} into itself for n = 2k-1, 2k = 0..4") +
                    (top_space_leaks ? "; P_{2k+1,2k} is not invariant for k > 0" : "")};
}

Outcome bridge_identity() {
  std::mt19937_64 rng(20240602);
  int compared = 0;
  for (int twok = 0; twok <= 4; ++twok)
    for (int i = 0; i < 10; ++i) {
      const Rational k(twok, 2), j = random_rational(rng), mu = random_rational(rng);
      if (!(operator_matrix(k, j, mu) == build_recurrence_matrix(k, j, mu).matrix))
        return {false, "mismatch at k=" + k.to_short_string() + " j=" + j.to_short_string() + " mu=" + mu.to_short_string()};
      ++compared;
    }
  return {true, std::to_string(compared) + " matrices equal entry by entry"};
}

Outcome p1_reproduction() {
  const auto r = compare_with_printed(Rational(0), P3Reading::Literal, 5);
  if (!r.match || !r.constant) return {false, "k=0 determinant not proportional to eta"};
  return {*r.constant == Rational(1, 2), "det = c * eta over 5 draws, c = " + r.constant->to_short_string()};
}

Outcome printed_comparison() {
  std::string detail;
  bool ok = true;
  auto report = [&](const Rational& k, P3Reading reading, const char* label) {
    const auto r = compare_with_printed(k, reading);
    detail += std::string(detail.empty() ? "" : "; ") + "k=" + k.to_short_string() + label + " " + r.verdict();
    if (r.match && r.constant) detail += " (c = " + r.constant->to_short_string() + ")";
    for (const auto& d : r.draws) {
      if (d.determinant.is_zero() && d.printed.is_zero()) ok = false;
      if (r.match) continue;
      const auto m = eta_rho_map(d.eta, d.rho);
      for (const auto& f : eigencheck_all_factors(k, m.j, m.mu)) ok &= f.passed;
    }
  };
  report(Rational(1, 2), P3Reading::Literal, "");
  report(Rational(1), P3Reading::Literal, " literal");
  report(Rational(1), P3Reading::QuarticLead, " kappa^4 lead");
  if (ok) detail += "; determinant roots pass the exact eigencheck";
  return {ok, detail};
}

std::vector<JuddianPoint> g_points;

Outcome oracle_grid() {
  int points = 0;
  double worst_e = 0.0, worst_r = 0.0;
  for (int twok = 1; twok <= 3; ++twok)
    for (long j = 0; j <= 2; ++j)
      for (const Rational mu : {Rational(0), Rational(1, 4)}) {
        const auto res = juddian_points(Rational(twok, 2), Rational(j), mu);
        for (const auto& p : res.points) {
          g_points.push_back(p);
          ++points;
          const auto& o = p.oracle;
          if (!o.performed || !o.energy_found || !o.residual || o.distance > 1e-6 || *o.residual > 1e-8 ||
              o.residual_truncation < 40)
            return {false, "k=" + p.k.to_short_string() + " j=" + std::to_string(j) + " mu=" + mu.to_short_string() +
                               " t=" + std::to_string(p.kappa_sq_value) + " fails the oracle check"};
          worst_e = std::max(worst_e, o.distance);
          worst_r = std::max(worst_r, *o.residual);
        }
      }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d points, max |E - E_oracle| = %.1e, max residual = %.1e", points, worst_e, worst_r);
  return {points > 0, buf};
}

Outcome exact_eigencheck_all() {
  JuddianSettings s;
  s.run_oracle = false;
  const Rational extra[][3] = {{Rational(1), Rational(-1), Rational(-3, 10)},
                               {Rational(3, 2), Rational(-3, 2), Rational(0)},
                               {Rational(2), Rational(5, 2), Rational(1, 3)},
                               {Rational(2), Rational(-4), Rational(-1, 5)}};
  auto all = g_points;
  for (const auto& e : extra)
    for (const auto& p : juddian_points(e[0], e[1], e[2], s).points) all.push_back(p);
  int passed = 0;
  for (const auto& p : all) passed += (p.exact_eigencheck && exact_eigencheck(p)) ? 1 : 0;
  const bool ok = !all.empty() && passed == static_cast<int>(all.size());
  return {ok, std::to_string(passed) + "/" + std::to_string(all.size()) + " points satisfy L s = lambda s exactly"};
}

Outcome displaced_oscillator() {
  const std::vector<double> kappas{0.25, 0.5, 0.75, 1.0, 1.5};
  std::string detail;
  bool ok = true;
  for (const Rational k : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
    const auto r = arbitrate_displaced_oscillator(k, kappas);
    ok &= !r.printed_formula.empty() && !r.derived_formula.empty() && r.samples.size() == kappas.size();
    bool all_printed = true, all_derived = true;
    for (const auto& s : r.samples) {
      all_printed &= s.printed_found;
      all_derived &= s.derived_found;
    }
    if (r.verdict == ArbitrationVerdict::PrintedConfirmed) ok &= all_printed;
    if (r.verdict == ArbitrationVerdict::DerivedConfirmed) ok &= all_derived;
    if (r.verdict == ArbitrationVerdict::NeitherForAllKappa) ok &= !all_printed && !all_derived;
    detail += (detail.empty() ? "k=" : ", k=") + k.to_short_string() + ": " + to_string(r.verdict);
  }
  const auto base = arbitrate_displaced_oscillator(Rational(0), kappas);
  detail += "; k=0 (determinant identically zero): " + to_string(base.verdict);
  return {ok, detail + " (oracle in the mirror sector j=0, mu=-1/2)"};
}

Outcome oracle_sanity() {
  double worst_ladder = 0.0, worst_sym = 0.0;
  bool monotone = true;
  for (long j = 0; j <= 3; ++j)
    for (const Rational mu : {Rational(0), Rational(1, 4), Rational(-2, 5)}) {
      const int n = 40;
      const auto ladder = symmetric_eigen(build_sector_hamiltonian({Rational(j), mu, 0.0, Rational(0)}, n)).values;
      std::vector<double> expected;
      for (int m = 0; m <= n; ++m) {
        expected.push_back(j + 2.0 * m + 1.5 + 2 * mu.to_double());
        expected.push_back(j + 2.0 * m + 1.5 - 2 * mu.to_double());
      }
      std::sort(expected.begin(), expected.end());
      for (std::size_t i = 0; i < expected.size(); ++i) worst_ladder = std::max(worst_ladder, std::abs(ladder[i] - expected[i]));

      for (double kappa : {0.4, 1.1}) {
        const auto a = symmetric_eigen(build_sector_hamiltonian({Rational(j), mu, kappa, Rational(0)}, n), 1e-13, false).values;
        const auto b = symmetric_eigen(build_sector_hamiltonian({Rational(j), mu, -kappa, Rational(0)}, n), 1e-13, false).values;
        for (std::size_t i = 0; i < a.size(); ++i) worst_sym = std::max(worst_sym, std::abs(a[i] - b[i]));
        double previous = 1e300;
        for (int m = 4; m <= 64; m *= 2) {
          const double e0 =
              symmetric_eigen(build_sector_hamiltonian({Rational(j), mu, kappa, Rational(0)}, m), 1e-13, false).values[0];
          monotone &= e0 <= previous + 1e-12;
          previous = e0;
        }
      }
    }
  char buf[160];
  std::snprintf(buf, sizeof buf, "ladder error %.1e, kappa sign error %.1e, ground state %s", worst_ladder, worst_sym,
                monotone ? "monotone" : "NOT monotone");
  return {worst_ladder <= 1e-10 && worst_sym <= 1e-10 && monotone, buf};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "algebra suite", 10.0, algebra_suite},
      {2, "QES closure", 0.0, qes_closure},
      {3, "bridge identity", 0.0, bridge_identity},
      {4, "P1 reproduction", 0.0, p1_reproduction},
      {5, "P2/P3 comparison", 0.0, printed_comparison},
      {6, "oracle cross-validation", 60.0, oracle_grid},
      {7, "exact eigencheck", 0.0, exact_eigencheck_all},
      {8, "displaced-oscillator arbitration", 0.0, displaced_oscillator},
      {9, "oracle sanity", 5.0, oracle_sanity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the time limit)";
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
