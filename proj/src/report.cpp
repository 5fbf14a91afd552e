#include "jtqes/report.hpp"

#include <cmath>

namespace jtqes::report {

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
  return {{"variable", "t"}, {"coefficients", coeffs}, {"text", p.to_string()}};
}

Polynomial polynomial_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coefficients")) c.push_back(rational_from_json(x));
  return Polynomial(std::move(c));
}

namespace {

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(const RootEnclosure& e) {
  return {{"lower", to_json(e.lower)},
          {"upper", to_json(e.upper)},
          {"exact", e.is_exact()},
          {"multiplicity", e.multiplicity_hint},
          {"midpoint", e.midpoint_double()}};
}

json to_json(const OracleValidation& o) {
  json j = {{"performed", o.performed}};
  if (!o.note.empty()) j["note"] = o.note;
  if (!o.performed) return j;
  j["via_mirror_sector"] = o.via_analogue;
  j["sector"] = {{"j", to_json(o.sector.j)}, {"mu", to_json(o.sector.mu)}};
  j["energy_found"] = o.energy_found;
  j["nearest_eigenvalue"] = o.nearest;
  j["distance"] = o.distance;
  j["truncation"] = o.truncation_used;
  if (o.residual) {
    j["residual"] = number_or_null(*o.residual);
    j["residual_truncation"] = o.residual_truncation;
  }
  return j;
}

json to_json(const JuddianPoint& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients) coeffs.push_back(to_json(c));
  return {{"kappa_sq", to_json(p.kappa_sq)},
          {"kappa", {{"lower", p.kappa_lower}, {"upper", p.kappa_upper}, {"midpoint", p.kappa()}}},
          {"factor", to_json(p.factor)},
          {"energy",
           {{"lower", to_json(p.energy_lower)}, {"upper", to_json(p.energy_upper)}, {"value", p.energy},
            {"formula", "E = 2k + 1/2 - 2 kappa^2"}}},
          {"lambda", to_json(p.lambda)},
          {"null_vector", {{"modulus", to_json(p.factor)}, {"entries", coeffs}}},
          {"validation",
           {{"exact_eigencheck", p.exact_eigencheck}, {"series_check", p.series_check}, {"oracle", to_json(p.oracle)}}}};
}

json to_json(const JuddianResult& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back(to_json(p));
  json j = {{"order", r.system.order},
            {"mu_recurrence", to_json(r.system.mu)},
            {"determinant", to_json(r.determinant)},
            {"t_power", r.t_power},
            {"reduced_determinant", to_json(r.reduced)},
            {"baseline_condition", r.baseline_condition},
            {"points", points}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const SpectrumReport& r) {
  return {{"eigenvalues", r.eigenvalues}, {"truncation_used", r.truncation_used}, {"convergence_gap", r.convergence_gap}};
}

json to_json(const AlgebraReport& r) {
  json rel = json::array();
  for (const auto& x : r.results) rel.push_back({{"relation", x.relation}, {"passed", x.passed}});
  return {{"k", to_json(r.k)}, {"max_degree", r.max_degree}, {"all_passed", r.all_passed()}, {"relations", rel}};
}

json to_json(const ComparisonReport& r) {
  json draws = json::array();
  for (const auto& d : r.draws) {
    json x = {{"eta", to_json(d.eta)},
              {"rho", to_json(d.rho)},
              {"determinant", to_json(d.determinant)},
              {"printed", to_json(d.printed)},
              {"proportional", d.proportional}};
    if (d.constant) x["constant"] = to_json(*d.constant);
    if (!d.proportional && !d.difference.is_zero()) x["printed_minus_scaled_determinant"] = to_json(d.difference);
    draws.push_back(x);
  }
  json j = {{"k", to_json(r.k)},
            {"reading", r.reading == P3Reading::Literal ? "literal" : "kappa4-lead"},
            {"verdict", r.verdict()},
            {"draws", draws}};
  if (r.constant) j["constant"] = to_json(*r.constant);
  return j;
}

json to_json(const MappingRecord& r) {
  json j = {{"case", case_info(r.name).id},
            {"j_literature", to_json(r.j_literature)},
            {"mu_literature", to_json(r.mu_literature)},
            {"j_recurrence", to_json(r.j_recurrence)},
            {"mu_recurrence", to_json(r.mu_recurrence)},
            {"mu_hamiltonian", to_json(r.mu_hamiltonian)},
            {"steps", r.steps}};
  if (!r.variant.empty()) j["variant"] = r.variant;
  if (r.eta_rho) {
    j["eta"] = to_json(r.eta_rho->first);
    j["rho"] = to_json(r.eta_rho->second);
    j["eta_rho_order"] = r.order == EtaRhoOrder::RecurrenceJ ? "recurrence-j" : "literature-j";
  }
  return j;
}

json to_json(const ArbitrationReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"kappa", s.kappa},
                       {"printed_energy", s.energies.printed},
                       {"derived_energy", s.energies.derived},
                       {"printed_found", s.printed_found},
                       {"derived_found", s.derived_found},
                       {"printed_distance", s.printed_distance},
                       {"derived_distance", s.derived_distance}});
  return {{"k", to_json(r.k)},
          {"printed_formula", r.printed_formula},
          {"derived_formula", r.derived_formula},
          {"oracle_sector", {{"j", to_json(r.analogue.j)}, {"mu", to_json(r.analogue.mu)}}},
          {"determinant", r.determinant},
          {"determinant_vanishes", r.determinant_vanishes},
          {"confirmed", to_string(r.verdict)},
          {"summary", r.summary},
          {"samples", samples}};
}

json to_json(const SystemComparison& r) {
  return {{"transform_matches_printed", r.transform_matches_printed},
          {"ode_form_matches_printed", r.ode_form_matches_printed},
          {"printed_L_matches_printed", r.printed_L_matches_printed},
          {"derived", r.derived},
          {"printed", r.printed},
          {"note", r.note}};
}

json record(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

}  // namespace jtqes::report
