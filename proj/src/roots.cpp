#include "jtqes/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace jtqes {

SturmSequence::SturmSequence(const Polynomial& squarefree) {
  chain_.push_back(squarefree);
  if (squarefree.degree() <= 0) return;
  chain_.push_back(squarefree.derivative());
  while (chain_.back().degree() > 0) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::variations(const Rational& t) const {
  int changes = 0, last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

namespace {

// a and b are not roots of s.
void isolate_open(Polynomial s, const Rational& a, const Rational& b, std::vector<Rational>& exact,
                  std::vector<std::pair<Rational, Rational>>& open) {
  if (s.degree() <= 0) return;
  SturmSequence sturm(s);
  int n = sturm.count(a, b);
  if (n == 0) return;
  if (n == 1) {
    open.emplace_back(a, b);
    return;
  }
  Rational m = midpoint(a, b);
  if (s.sign_at(m) == 0) {
    exact.push_back(m);
    Polynomial reduced = exact_divide(s, Polynomial({-m, Rational(1)}));
    isolate_open(reduced, a, b, exact, open);
    return;
  }
  isolate_open(s, a, m, exact, open);
  isolate_open(s, m, b, exact, open);
}

int multiplicity_of(const std::vector<std::pair<Polynomial, int>>& factors, const RootEnclosure& e) {
  for (const auto& [f, mult] : factors) {
    if (e.is_exact()) {
      if (f.sign_at(e.lower) == 0) return mult;
      continue;
    }
    if (f.degree() < 1) continue;
    if (SturmSequence(f).count(e.lower, e.upper) > 0) return mult;
  }
  throw std::logic_error("isolate_real_roots: root not attributed to any squarefree factor");
}

}  // namespace

std::vector<RootEnclosure> isolate_real_roots(const Polynomial& p, const Rational& low, const Rational& high) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: identically zero polynomial");
  if (high < low) throw std::invalid_argument("isolate_real_roots: empty range");
  std::vector<RootEnclosure> out;
  if (p.degree() == 0) return out;

  const auto factors = squarefree_decomposition(p);
  Polynomial s = squarefree_part(p);

  std::vector<Rational> exact;
  for (const Rational* endpoint : {&low, &high}) {
    if (s.sign_at(*endpoint) == 0 &&
        std::find(exact.begin(), exact.end(), *endpoint) == exact.end()) {
      exact.push_back(*endpoint);
    }
  }
  for (const auto& r : exact) s = exact_divide(s, Polynomial({-r, Rational(1)}));

  std::vector<std::pair<Rational, Rational>> open;
  if (low < high) isolate_open(s, low, high, exact, open);

  for (const auto& r : exact) out.push_back({r, r, 1});
  for (const auto& [a, b] : open) out.push_back({a, b, 1});
  std::sort(out.begin(), out.end(), [](const RootEnclosure& x, const RootEnclosure& y) { return x.lower < y.lower; });

  // An exact root may sit on the boundary of an open neighbour. Bisect on the
  // polynomial with the exact roots divided out until endpoints are non-roots.
  Polynomial sq = squarefree_part(p);
  Polynomial rest = sq;
  for (const auto& r : exact) rest = exact_divide(rest, Polynomial({-r, Rational(1)}));
  for (auto& e : out) {
    while (!e.is_exact() && (sq.sign_at(e.lower) == 0 || sq.sign_at(e.upper) == 0 || e.width() > Rational(1))) {
      Rational m = e.mid();
      int sm = rest.sign_at(m);
      if (sm == 0) {
        e.lower = e.upper = m;
      } else if (sm == rest.sign_at(e.lower)) {
        e.lower = m;
      } else {
        e.upper = m;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RootEnclosure& x, const RootEnclosure& y) { return x.lower < y.lower; });
  for (auto& e : out) e.multiplicity_hint = multiplicity_of(factors, e);
  return out;
}

RootEnclosure refine_enclosure(const Polynomial& p, const RootEnclosure& e, const Rational& tol) {
  if (tol.sign() <= 0) throw std::invalid_argument("refine_enclosure: tolerance must be positive");
  if (p.is_zero()) throw std::domain_error("refine_enclosure: zero polynomial");
  if (e.is_exact()) {
    if (p.sign_at(e.lower) != 0) throw std::invalid_argument("refine_enclosure: point is not a root");
    return e;
  }
  Polynomial s = squarefree_part(p);
  RootEnclosure r = e;
  int sl = s.sign_at(r.lower), su = s.sign_at(r.upper);
  if (r.upper < r.lower || sl == 0 || su == 0 || sl == su)
    throw std::invalid_argument("refine_enclosure: enclosure does not bracket a sign change");
  while (r.width() > tol) {
    Rational m = r.mid();
    int sm = s.sign_at(m);
    if (sm == 0) {
      r.lower = r.upper = m;
      return r;
    }
    if (sm == sl) {
      r.lower = m;
    } else {
      r.upper = m;
    }
  }
  return r;
}

}  // namespace jtqes
