#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "jtqes/params.hpp"
#include "jtqes/symmetric_eigen.hpp"

namespace jtqes {

/// Thrown when the truncation doubling hits its ceiling without converging.
class OracleNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix of H in the sector basis
///   up(n)   = (a1+)^(j+n) (a2+)^n |0>|up>,
///   down(n) = (a1+)^(j+1+n) (a2+)^n |0>|down>,  n = 0..N,
/// normalized and interleaved [up(0), down(0), up(1), down(1), ...].
///
///   <up(n)|H|up(n)>       = j + 2n + 1 + (1/2 + 2mu)
///   <down(n)|H|down(n)>   = j + 2n + 2 - (1/2 + 2mu)
///   <up(n)|H|down(n)>     = 2 kappa sqrt(j + 1 + n)     (a1 s+)
///   <up(n)|H|down(n - 1)> = 2 kappa sqrt(n)             (a2+ s+)
SymmetricMatrix build_sector_hamiltonian(const SectorParams& p, int truncation);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // lowest `window`, ascending
  int truncation_used = 0;
  double convergence_gap = 0.0;
};

struct OracleSettings {
  int initial_truncation = 16;
  int max_truncation = 4096;
  double eigen_tol = 1e-13;
};

/// Doubles the truncation from 16 until the lowest `window` eigenvalues move
/// by less than tol. Throws OracleNonConvergence past max_truncation.
SpectrumReport converged_spectrum(const SectorParams& p, int window, double tol,
                                  const OracleSettings& settings = {});

struct EnergyMatch {
  bool found = false;
  double distance = 0.0;
  double nearest = 0.0;
};
EnergyMatch contains_energy(const SpectrumReport& report, double energy, double tol);

/// Number of padding levels used by residual_norm.
inline constexpr int kResidualMargin = 2;

/// ||(H - E) psi|| / ||psi|| with psi given in SectorBasis(j, N), evaluated
/// against the Hamiltonian truncated at N + kResidualMargin.
double residual_norm(std::span<const double> state, const SectorParams& p, int truncation, double energy);

/// Builds H and J on the full two-boson x spin space with n1 + n2 <= N and
/// checks ||JH - HJ|| <= 1e-12.
bool check_J_commutes(const SectorParams& p, int total_bosons);

/// Full-space Hamiltonian used by check_J_commutes. States are ordered as
/// returned by full_space_states().
struct FullSpaceState {
  int n1 = 0, n2 = 0;
  bool up = true;
  /// J eigenvalue minus 1/2, i.e. the sector label j.
  int sector_j() const { return n1 - n2 + (up ? 0 : -1); }
};
std::vector<FullSpaceState> full_space_states(int total_bosons);
SymmetricMatrix build_full_hamiltonian(const SectorParams& p, int total_bosons);

/// Realizable sector with the same spectrum. Integer j >= 0 maps to itself.
/// Integer j <= -1 maps through the mode exchange a1 <-> a2, s+ <-> s-
/// (J -> -J) to j' = -j - 1, mu' = -1/2 - mu. Half-integer j has none.
std::optional<SectorParams> realizable_analogue(const SectorParams& p);

}  // namespace jtqes
