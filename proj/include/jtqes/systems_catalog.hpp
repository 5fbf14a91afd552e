#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jtqes/params.hpp"

namespace jtqes {

enum class CaseName { DisplacedOscillator, LinearExE, Gamma8, Dimer, ExEExternalField };

/// How (eta, rho) combine with the j -> -j-1 replacement.
enum class EtaRhoOrder {
  RecurrenceJ,   // j = -(eta+rho+2)/2 is the recurrence j (replacement already applied)
  LiteratureJ,   // j' = -(eta+rho+2)/2 is the literature j, then j = -j'-1
};

struct CaseInfo {
  CaseName name;
  std::string id;           // CLI name
  std::string description;
  std::string constraint;   // human readable, on the literature (mu', j')
};

const std::vector<CaseInfo>& case_catalog();
std::optional<CaseName> parse_case(std::string_view id);
const CaseInfo& case_info(CaseName name);

/// Raw inputs for a preset. Literature parameters (j', mu') are those of the
/// recurrence after "replacing j by -j-1"; G sets mu' = G/2.
struct PresetInput {
  Rational k{0};
  std::optional<Rational> j_literature;
  std::optional<Rational> mu_literature;
  std::optional<Rational> G;
  std::optional<std::pair<Rational, Rational>> eta_rho;
  EtaRhoOrder order = EtaRhoOrder::RecurrenceJ;
  std::string variant;  // Gamma8 label: "tau2" or "e+tau2"
};

struct MappingRecord {
  CaseName name;
  std::string variant;
  Rational j_literature, mu_literature;
  Rational j_recurrence, mu_recurrence;
  Rational mu_hamiltonian;
  std::optional<std::pair<Rational, Rational>> eta_rho;
  EtaRhoOrder order = EtaRhoOrder::RecurrenceJ;
  std::vector<std::string> steps;
};

struct PresetResult {
  SectorParams params;  // j is the recurrence j, mu the Hamiltonian mu
  MappingRecord record;
};

/// Resolves a named case. Throws std::invalid_argument on constraint violations.
PresetResult preset(CaseName name, const PresetInput& input);

struct DisplacedOscillatorEnergies {
  double printed = 0.0;  // (2k + 3/2) - kappa^2
  double derived = 0.0;  // 2k + 1/2 - 2 kappa^2
};
DisplacedOscillatorEnergies displaced_oscillator_energy(const Rational& k, double kappa);

struct ArbitrationSample {
  double kappa = 0.0;
  DisplacedOscillatorEnergies energies;
  double printed_distance = 0.0;
  double derived_distance = 0.0;
  bool printed_found = false;
  bool derived_found = false;
};

enum class ArbitrationVerdict { DerivedConfirmed, PrintedConfirmed, NeitherForAllKappa };
std::string to_string(ArbitrationVerdict v);

struct ArbitrationReport {
  Rational k;
  std::string printed_formula = "E = (2k + 3/2) - kappa^2";
  std::string derived_formula = "E = 2k + 1/2 - 2 kappa^2";
  SectorParams analogue;  // realizable sector used by the oracle
  bool determinant_vanishes = false;
  std::string determinant;
  std::vector<ArbitrationSample> samples;
  ArbitrationVerdict verdict = ArbitrationVerdict::NeitherForAllKappa;
  std::string summary;
};

/// Compares both candidate displaced-oscillator energies with the oracle in
/// the realizable mirror sector of case (a), at each kappa in `kappas`.
ArbitrationReport arbitrate_displaced_oscillator(const Rational& k, const std::vector<double>& kappas,
                                                 double tol = 1e-6);

}  // namespace jtqes
