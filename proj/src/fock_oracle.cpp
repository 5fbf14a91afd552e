#include "jtqes/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace jtqes {

SymmetricMatrix build_sector_hamiltonian(const SectorParams& p, int truncation) {
  if (!p.realizable_sector())
    throw std::invalid_argument("build_sector_hamiltonian: sector j=" + p.j.to_short_string() +
                                " is not realizable (need integer j >= 0)");
  if (truncation < 1) throw std::invalid_argument("build_sector_hamiltonian: truncation must be >= 1");
  const double j = p.j.to_double();
  const double split = 0.5 + 2.0 * p.mu.to_double();
  const auto n_levels = static_cast<std::size_t>(truncation) + 1;
  SymmetricMatrix h(2 * n_levels);
  for (std::size_t n = 0; n < n_levels; ++n) {
    const double nd = static_cast<double>(n);
    const std::size_t up = 2 * n, down = 2 * n + 1;
    h.set(up, up, j + 2.0 * nd + 1.0 + split);
    h.set(down, down, j + 2.0 * nd + 2.0 - split);
    h.set(up, down, 2.0 * p.kappa * std::sqrt(j + 1.0 + nd));
    if (n > 0) h.set(up, down - 2, 2.0 * p.kappa * std::sqrt(nd));
  }
  return h;
}

SpectrumReport converged_spectrum(const SectorParams& p, int window, double tol, const OracleSettings& settings) {
  if (window < 1) throw std::invalid_argument("converged_spectrum: window must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("converged_spectrum: tolerance must be positive");
  std::vector<double> previous;
  for (int n = settings.initial_truncation; n <= settings.max_truncation; n *= 2) {
    if (2 * (n + 1) < window) continue;
    auto eig = symmetric_eigen(build_sector_hamiltonian(p, n), settings.eigen_tol, false);
    std::vector<double> low(eig.values.begin(), eig.values.begin() + window);
    if (!previous.empty()) {
      double gap = 0.0;
      for (int i = 0; i < window; ++i) gap = std::max(gap, std::abs(low[i] - previous[i]));
      if (gap < tol) return {std::move(low), n, gap};
    }
    previous = std::move(low);
  }
  throw OracleNonConvergence("converged_spectrum: no convergence up to N=" +
                             std::to_string(settings.max_truncation));
}

EnergyMatch contains_energy(const SpectrumReport& report, double energy, double tol) {
  EnergyMatch m;
  m.distance = std::numeric_limits<double>::infinity();
  for (double e : report.eigenvalues) {
    const double d = std::abs(e - energy);
    if (d < m.distance) {
      m.distance = d;
      m.nearest = e;
    }
  }
  m.found = m.distance <= tol;
  return m;
}

double residual_norm(std::span<const double> state, const SectorParams& p, int truncation, double energy) {
  const auto dim = static_cast<std::size_t>(2 * (truncation + 1));
  if (state.size() != dim) throw std::invalid_argument("residual_norm: state size does not match truncation");
  double norm = 0.0;
  for (double x : state) norm += x * x;
  if (norm == 0.0) throw std::invalid_argument("residual_norm: zero state");
  auto h = build_sector_hamiltonian(p, truncation + kResidualMargin);
  std::vector<double> padded(h.dimension(), 0.0);
  std::copy(state.begin(), state.end(), padded.begin());
  auto hv = h.multiply(padded);
  double r = 0.0;
  for (std::size_t i = 0; i < hv.size(); ++i) {
    const double d = hv[i] - energy * padded[i];
    r += d * d;
  }
  return std::sqrt(r / norm);
}

std::vector<FullSpaceState> full_space_states(int total_bosons) {
  std::vector<FullSpaceState> out;
  for (int total = 0; total <= total_bosons; ++total)
    for (int n1 = total; n1 >= 0; --n1)
      for (bool up : {true, false}) out.push_back({n1, total - n1, up});
  return out;
}

SymmetricMatrix build_full_hamiltonian(const SectorParams& p, int total_bosons) {
  if (total_bosons < 0) throw std::invalid_argument("build_full_hamiltonian: negative truncation");
  const auto states = full_space_states(total_bosons);
  std::map<std::tuple<int, int, bool>, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[{states[i].n1, states[i].n2, states[i].up}] = i;
  const double split = 0.5 + 2.0 * p.mu.to_double();
  SymmetricMatrix h(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    h.set(i, i, s.n1 + s.n2 + 1.0 + (s.up ? split : -split));
    if (s.up) continue;
    // s+ terms acting on |n1, n2, down>: a1 and a2+ (the s- terms are their adjoints)
    if (s.n1 > 0) {
      auto it = index.find({s.n1 - 1, s.n2, true});
      if (it != index.end()) h.set(it->second, i, 2.0 * p.kappa * std::sqrt(static_cast<double>(s.n1)));
    }
    auto it = index.find({s.n1, s.n2 + 1, true});
    if (it != index.end()) h.set(it->second, i, 2.0 * p.kappa * std::sqrt(static_cast<double>(s.n2 + 1)));
  }
  return h;
}

bool check_J_commutes(const SectorParams& p, int total_bosons) {
  const auto states = full_space_states(total_bosons);
  const auto h = build_full_hamiltonian(p, total_bosons);
  double worst = 0.0;
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = 0; b < states.size(); ++b) {
      const double ja = states[a].n1 - states[a].n2 + (states[a].up ? 0.5 : -0.5);
      const double jb = states[b].n1 - states[b].n2 + (states[b].up ? 0.5 : -0.5);
      worst = std::max(worst, std::abs((ja - jb) * h(a, b)));
    }
  return worst <= 1e-12;
}

std::optional<SectorParams> realizable_analogue(const SectorParams& p) {
  if (!p.j.is_integer()) return std::nullopt;
  if (p.j.sign() >= 0) return p;
  SectorParams q = p;
  q.j = -p.j - Rational(1);
  q.mu = Rational(-1, 2) - p.mu;
  return q;
}

}  // namespace jtqes
