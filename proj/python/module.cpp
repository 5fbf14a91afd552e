#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jtqes/bargmann.hpp"
#include "jtqes/fock_oracle.hpp"
#include "jtqes/qes_solver.hpp"
#include "jtqes/report.hpp"
#include "jtqes/systems_catalog.hpp"

namespace py = pybind11;
using namespace jtqes;

namespace {

Rational to_rational(const py::handle& value) { return Rational::parse(py::str(value).cast<std::string>()); }

py::object to_python(const report::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object juddian(const py::object& k, const py::object& j, const py::object& mu, const py::object& kappa_max,
                   const py::object& tol, bool run_oracle) {
  JuddianSettings s;
  s.kappa_max = to_rational(kappa_max);
  s.tol = to_rational(tol);
  s.run_oracle = run_oracle;
  const Rational kr = to_rational(k), jr = to_rational(j), mr = to_rational(mu);
  JuddianResult r;
  {
    py::gil_scoped_release release;
    r = juddian_points(kr, jr, mr, s);
  }
  return to_python(report::to_json(r));
}

py::object spectrum(const py::object& j, const py::object& mu, double kappa, int window, double tol) {
  const SectorParams p{to_rational(j), to_rational(mu), kappa, Rational(0)};
  SpectrumReport r;
  {
    py::gil_scoped_release release;
    r = converged_spectrum(p, window, tol);
  }
  return to_python(report::to_json(r));
}

std::vector<std::vector<double>> sector_hamiltonian(const py::object& j, const py::object& mu, double kappa, int n) {
  const auto h = build_sector_hamiltonian({to_rational(j), to_rational(mu), kappa, Rational(0)}, n);
  std::vector<std::vector<double>> out(h.dimension(), std::vector<double>(h.dimension()));
  for (std::size_t a = 0; a < h.dimension(); ++a)
    for (std::size_t b = 0; b < h.dimension(); ++b) out[a][b] = h(a, b);
  return out;
}

std::vector<std::vector<std::string>> recurrence_matrix(const py::object& k, const py::object& j,
                                                        const py::object& mu_rec) {
  const auto r = build_recurrence_matrix(to_rational(k), to_rational(j), to_rational(mu_rec));
  std::vector<std::vector<std::string>> out(r.matrix.rows());
  for (std::size_t a = 0; a < r.matrix.rows(); ++a)
    for (std::size_t b = 0; b < r.matrix.cols(); ++b) out[a].push_back(r.matrix(a, b).to_string());
  return out;
}

py::object determinant(const py::object& k, const py::object& j, const py::object& mu_rec) {
  return to_python(report::to_json(
      determinant_polynomial(build_recurrence_matrix(to_rational(k), to_rational(j), to_rational(mu_rec)))));
}

py::object compare_printed(const py::object& k, const std::string& reading, int draws, std::uint64_t seed) {
  P3Reading r;
  if (reading == "literal")
    r = P3Reading::Literal;
  else if (reading == "quartic")
    r = P3Reading::QuarticLead;
  else
    throw std::invalid_argument("reading must be 'literal' or 'quartic'");
  return to_python(report::to_json(compare_with_printed(to_rational(k), r, draws, seed)));
}

py::object preset_case(const std::string& name, const py::object& k, const py::object& j, const py::object& mu,
                       const py::object& G) {
  const auto c = parse_case(name);
  if (!c) throw std::invalid_argument("unknown case '" + name + "'");
  PresetInput in;
  in.k = to_rational(k);
  if (!j.is_none()) in.j_literature = to_rational(j);
  if (!mu.is_none()) in.mu_literature = to_rational(mu);
  if (!G.is_none()) in.G = to_rational(G);
  const auto r = preset(*c, in);
  auto out = report::to_json(r.record);
  out["sector"] = {{"j", report::to_json(r.params.j)},
                   {"mu", report::to_json(r.params.mu)},
                   {"k", report::to_json(r.params.k)},
                   {"realizable", r.params.realizable_sector()}};
  return to_python(out);
}

}  // namespace

PYBIND11_MODULE(_jtqes, m) {
  m.doc() = "Exact and numerical tools for the two-mode spin-boson QES problem";

  py::register_exception<DegenerateDeterminant>(m, "DegenerateDeterminant", PyExc_ArithmeticError);
  py::register_exception<OracleNonConvergence>(m, "OracleNonConvergence", PyExc_RuntimeError);

  m.def("juddian", &juddian, py::arg("k"), py::arg("j"), py::arg("mu"), py::arg("kappa_max") = "10",
        py::arg("tol") = "1/1000000000", py::arg("oracle") = true,
        "Juddian points for Hamiltonian mu; returns the same record the CLI writes under 'result'.");
  m.def("spectrum", &spectrum, py::arg("j"), py::arg("mu"), py::arg("kappa"), py::arg("window") = 8,
        py::arg("tol") = 1e-10);
  m.def("sector_hamiltonian", &sector_hamiltonian, py::arg("j"), py::arg("mu"), py::arg("kappa"), py::arg("n"));
  m.def("recurrence_matrix", &recurrence_matrix, py::arg("k"), py::arg("j"), py::arg("mu_rec"));
  m.def("determinant", &determinant, py::arg("k"), py::arg("j"), py::arg("mu_rec"));
  m.def(
      "algebra_check",
      [](const py::object& k, bool printed_lowering) {
        return to_python(report::to_json(run_algebra_suite(
            to_rational(k), printed_lowering ? LoweringVariant::Printed : LoweringVariant::Corrected)));
      },
      py::arg("k"), py::arg("printed_lowering") = false);
  m.def("compare_printed", &compare_printed, py::arg("k"), py::arg("reading") = "literal", py::arg("draws") = 5,
        py::arg("seed") = 20240601);
  m.def("preset", &preset_case, py::arg("name"), py::arg("k"), py::arg("j") = py::none(), py::arg("mu") = py::none(),
        py::arg("G") = py::none());
  m.def(
      "arbitrate_displaced_oscillator",
      [](const py::object& k, const std::vector<double>& kappas) {
        return to_python(report::to_json(arbitrate_displaced_oscillator(to_rational(k), kappas)));
      },
      py::arg("k"), py::arg("kappas"));
  m.def(
      "check_J_commutes",
      [](const py::object& mu, double kappa, int n) {
        return check_J_commutes({Rational(0), to_rational(mu), kappa, Rational(0)}, n);
      },
      py::arg("mu"), py::arg("kappa"), py::arg("n"));
}
