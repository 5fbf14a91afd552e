#include "jtqes/systems_catalog.hpp"

#include <stdexcept>

#include "jtqes/fock_oracle.hpp"
#include "jtqes/qes_solver.hpp"

namespace jtqes {

const std::vector<CaseInfo>& case_catalog() {
  static const std::vector<CaseInfo> cases = {
      {CaseName::DisplacedOscillator, "displaced-oscillator", "displaced harmonic oscillator", "mu' = 0, j' = 0"},
      {CaseName::LinearExE, "linear-ExE", "linear E x e Jahn-Teller system", "mu' = 0, j' half-integer"},
      {CaseName::Gamma8, "Gamma8", "linear Gamma8 x tau2 and Gamma8 x (e + tau2) systems", "mu' = 0, j' integer"},
      {CaseName::Dimer, "dimer", "dimer (2 mu' = G)", "mu' != 0, j' = 0"},
      {CaseName::ExEExternalField, "ExE-external-field", "linear E x e system in an external field",
       "mu' != 0, j' half-integer"},
  };
  return cases;
}

std::optional<CaseName> parse_case(std::string_view id) {
  for (const auto& c : case_catalog())
    if (c.id == id) return c.name;
  return std::nullopt;
}

const CaseInfo& case_info(CaseName name) {
  for (const auto& c : case_catalog())
    if (c.name == name) return c;
  throw std::invalid_argument("case_info: unknown case");
}

namespace {

bool is_half_odd(const Rational& r) { return r.is_half_integer_multiple() && !r.is_integer(); }

void require(bool ok, const CaseInfo& info, const std::string& detail) {
  if (!ok) throw std::invalid_argument("preset " + info.id + " requires " + info.constraint + "; " + detail);
}

}  // namespace

PresetResult preset(CaseName name, const PresetInput& in) {
  const CaseInfo& info = case_info(name);
  two_k(in.k);
  MappingRecord rec;
  rec.name = name;
  rec.order = in.order;
  rec.eta_rho = in.eta_rho;

  if (in.eta_rho) {
    if (in.j_literature || in.mu_literature || in.G)
      throw std::invalid_argument("preset: give either (eta, rho) or explicit j/mu/G, not both");
    const auto [eta, rho] = *in.eta_rho;
    const Rational j_formula = -(eta + rho + Rational(2)) / Rational(2);
    rec.mu_literature = (eta - rho) / Rational(4);
    rec.steps.push_back("mu' = (eta - rho)/4 = " + rec.mu_literature.to_short_string());
    if (in.order == EtaRhoOrder::RecurrenceJ) {
      rec.j_recurrence = j_formula;
      rec.j_literature = -j_formula - Rational(1);
      rec.steps.push_back("j = -(eta + rho + 2)/2 = " + j_formula.to_short_string() + " taken as the recurrence j");
      rec.steps.push_back("j' = -j - 1 = " + rec.j_literature.to_short_string());
    } else {
      rec.j_literature = j_formula;
      rec.steps.push_back("j' = -(eta + rho + 2)/2 = " + j_formula.to_short_string() + " taken as the literature j");
    }
  } else {
    rec.j_literature = in.j_literature.value_or(Rational(0));
    if (in.G && in.mu_literature) throw std::invalid_argument("preset: give G or mu, not both");
    if (in.G) {
      rec.mu_literature = *in.G / Rational(2);
      rec.steps.push_back("2 mu' = G = " + in.G->to_short_string() + " -> mu' = " + rec.mu_literature.to_short_string());
    } else {
      rec.mu_literature = in.mu_literature.value_or(Rational(0));
    }
  }

  const Rational& jl = rec.j_literature;
  const bool mu_zero = rec.mu_literature.is_zero();
  switch (name) {
    case CaseName::DisplacedOscillator:
      require(mu_zero && jl.is_zero(), info, "got mu' = " + rec.mu_literature.to_short_string() + ", j' = " + jl.to_short_string());
      break;
    case CaseName::LinearExE:
      require(mu_zero && is_half_odd(jl), info, "got mu' = " + rec.mu_literature.to_short_string() + ", j' = " + jl.to_short_string());
      break;
    case CaseName::Gamma8:
      require(mu_zero && jl.is_integer(), info, "got mu' = " + rec.mu_literature.to_short_string() + ", j' = " + jl.to_short_string());
      rec.variant = in.variant.empty() ? "tau2" : in.variant;
      if (rec.variant != "tau2" && rec.variant != "e+tau2")
        throw std::invalid_argument("preset Gamma8: variant must be tau2 or e+tau2");
      break;
    case CaseName::Dimer:
      require(!mu_zero && jl.is_zero(), info, "got mu' = " + rec.mu_literature.to_short_string() + ", j' = " + jl.to_short_string());
      break;
    case CaseName::ExEExternalField:
      require(!mu_zero && is_half_odd(jl), info, "got mu' = " + rec.mu_literature.to_short_string() + ", j' = " + jl.to_short_string());
      break;
  }

  if (!(in.eta_rho && in.order == EtaRhoOrder::RecurrenceJ)) {
    rec.j_recurrence = -jl - Rational(1);
    rec.steps.push_back("replace j by -j - 1: j = " + rec.j_recurrence.to_short_string());
  }
  rec.mu_recurrence = rec.mu_literature;
  rec.mu_hamiltonian = hamiltonian_mu(rec.mu_recurrence);
  rec.steps.push_back("recurrence mu = " + rec.mu_recurrence.to_short_string() + " -> Hamiltonian mu = " +
                      rec.mu_hamiltonian.to_short_string());

  PresetResult out;
  out.params.j = rec.j_recurrence;
  out.params.mu = rec.mu_hamiltonian;
  out.params.k = in.k;
  out.record = std::move(rec);
  return out;
}

DisplacedOscillatorEnergies displaced_oscillator_energy(const Rational& k, double kappa) {
  const double tk = 2.0 * k.to_double();
  return {tk + 1.5 - kappa * kappa, tk + 0.5 - 2.0 * kappa * kappa};
}

std::string to_string(ArbitrationVerdict v) {
  switch (v) {
    case ArbitrationVerdict::DerivedConfirmed:
      return "derived";
    case ArbitrationVerdict::PrintedConfirmed:
      return "printed";
    case ArbitrationVerdict::NeitherForAllKappa:
      return "neither";
  }
  return "neither";
}

ArbitrationReport arbitrate_displaced_oscillator(const Rational& k, const std::vector<double>& kappas, double tol) {
  ArbitrationReport rep;
  rep.k = k;
  PresetInput input;
  input.k = k;
  const PresetResult p = preset(CaseName::DisplacedOscillator, input);
  const Polynomial det =
      determinant_polynomial(build_recurrence_matrix(k, p.record.j_recurrence, p.record.mu_recurrence));
  rep.determinant = det.to_string();
  rep.determinant_vanishes = det.is_zero();
  bool all_printed = !kappas.empty(), all_derived = !kappas.empty();
  for (double kappa : kappas) {
    SectorParams sp = p.params;
    sp.kappa = kappa;
    const SectorParams sector = *realizable_analogue(sp);
    rep.analogue = sector;
    ArbitrationSample s;
    s.kappa = kappa;
    s.energies = displaced_oscillator_energy(k, kappa);
    const double top = std::max(s.energies.printed, s.energies.derived);
    int window = 8;
    SpectrumReport spec = converged_spectrum(sector, window, 1e-10);
    while (spec.eigenvalues.back() < top + 0.5 && window < 512) {
      window *= 2;
      spec = converged_spectrum(sector, window, 1e-10);
    }
    const EnergyMatch mp = contains_energy(spec, s.energies.printed, tol);
    const EnergyMatch md = contains_energy(spec, s.energies.derived, tol);
    s.printed_found = mp.found;
    s.printed_distance = mp.distance;
    s.derived_found = md.found;
    s.derived_distance = md.distance;
    all_printed = all_printed && s.printed_found;
    all_derived = all_derived && s.derived_found;
    rep.samples.push_back(s);
  }
  if (all_derived && !all_printed) {
    rep.verdict = ArbitrationVerdict::DerivedConfirmed;
    rep.summary = "oracle confirms the derived formula at every sampled kappa; the printed formula is not confirmed";
  } else if (all_printed && !all_derived) {
    rep.verdict = ArbitrationVerdict::PrintedConfirmed;
    rep.summary = "oracle confirms the printed formula at every sampled kappa; the derived formula is not confirmed";
  } else {
    rep.verdict = ArbitrationVerdict::NeitherForAllKappa;
    rep.summary = "neither formula is an eigenvalue for every sampled kappa";
    if (!rep.determinant_vanishes)
      rep.summary += " (determinant " + rep.determinant + " does not vanish identically, so the baseline holds only at its roots)";
  }
  return rep;
}

}  // namespace jtqes
