// Copyright 2026 the stransport developers
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "stransport/catalog.hpp"
#include "stransport/engine.hpp"
#include "stransport/geometry.hpp"
#include "stransport/scenario.hpp"

namespace py = pybind11;
using namespace stransport;

namespace {

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix: empty rows");
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> matrix_to_rows(const Matrix& m) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    rows[i].resize(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

TransportLaw law_from_samples(const std::vector<double>& grid,
                              const std::vector<std::vector<std::vector<double>>>& samples,
                              const std::string& interpolation) {
  std::vector<Matrix> mats;
  mats.reserve(samples.size());
  for (const auto& s : samples) mats.push_back(matrix_from_rows(s));
  return tabulated_law(grid, mats,
                       interpolation == "cubic" ? Interp::cubic : Interp::linear);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "linear transports of tensors along curves (parallel, Fermi-Walker, Fermi, "
            "Truesdell, Jaumann, and user-defined laws)";

  py::register_exception<ScenarioError>(m, "ScenarioError");

  py::class_<TensorComponents>(m, "TensorComponents")
      .def(py::init([](int p, int q, int dim, std::vector<double> values) {
             return TensorComponents(p, q, dim, std::move(values));
           }),
           py::arg("p"), py::arg("q"), py::arg("dim"), py::arg("values"))
      .def_static("scalar", &TensorComponents::scalar)
      .def_static("vector", &TensorComponents::vector)
      .def_static("covector", &TensorComponents::covector)
      .def_readonly("p", &TensorComponents::p)
      .def_readonly("q", &TensorComponents::q)
      .def_readonly("dim", &TensorComponents::dim)
      .def_readonly("values", &TensorComponents::values)
      .def("__repr__", [](const TensorComponents& t) {
        return "TensorComponents(p=" + std::to_string(t.p) + ", q=" + std::to_string(t.q) +
               ", dim=" + std::to_string(t.dim) + ")";
      });

  m.def("tensor_product", &tensor_product, py::arg("a"), py::arg("b"));
  m.def("contract", &contract, py::arg("t"), py::arg("upper_slot"), py::arg("lower_slot"));

  py::class_<Interval>(m, "Interval")
      .def(py::init([](double lo, double hi) { return Interval{lo, hi}; }))
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi);

  py::class_<TransportLaw>(m, "TransportLaw")
      .def_property_readonly("dim", &TransportLaw::dim)
      .def_property_readonly("domain", &TransportLaw::domain)
      .def("coefficient",
           [](const TransportLaw& law, double s) { return matrix_to_rows(law.coefficient(s)); })
      .def("default_step", &TransportLaw::default_step);

  m.def(
      "constant_law",
      [](double lo, double hi, const std::vector<std::vector<double>>& gamma) {
        return constant_law(Interval{lo, hi}, matrix_from_rows(gamma));
      },
      py::arg("lo"), py::arg("hi"), py::arg("gamma"));
  m.def("tabulated_law", &law_from_samples, py::arg("grid"), py::arg("samples"),
        py::arg("interpolation") = "linear");

  py::class_<TransportMatrix>(m, "TransportMatrix")
      .def_readonly("s", &TransportMatrix::s)
      .def_readonly("t", &TransportMatrix::t)
      .def_property_readonly("H", [](const TransportMatrix& tm) { return matrix_to_rows(tm.H); })
      .def_property_readonly("H_inv",
                             [](const TransportMatrix& tm) { return matrix_to_rows(tm.H_inv); })
      .def("inverse_pair_defect", &TransportMatrix::inverse_pair_defect);

  m.def("transport_matrix", &transport_matrix, py::arg("law"), py::arg("s"), py::arg("t"),
        py::arg("step") = 0.0);
  m.def("transport_tensor", &transport_tensor, py::arg("tm"), py::arg("tensor"));
  m.def(
      "derivation_of_transported",
      [](const TransportLaw& law, const TensorComponents& t0, double s, double t, double step) {
        return derivation_of_transported(law, t0, s, t, step);
      },
      py::arg("law"), py::arg("t0"), py::arg("s"), py::arg("t"), py::arg("step") = 0.0);

  m.def(
      "verify_axioms",
      [](const TransportLaw& law, double tol, int triples, std::uint64_t seed, double step) {
        ProbeSpec probes;
        probes.triples = triples;
        probes.seed = seed;
        probes.step = step;
        const AxiomReport rep = verify_axioms(law, probes, tol);
        py::dict checks;
        for (const AxiomCheck& c : rep.checks) checks[c.name.c_str()] = c.residual;
        py::dict out;
        out["pass"] = rep.pass;
        out["tolerance"] = rep.tolerance;
        out["checks"] = checks;
        return out;
      },
      py::arg("law"), py::arg("tol") = 1e-6, py::arg("triples") = 10,
      py::arg("seed") = 0x5eed5eedULL, py::arg("step") = 0.0);

  // geometry through the catalog
  m.def(
      "catalog_law",
      [](const std::string& manifold, const std::string& curve_id,
         const std::map<std::string, double>& scalars,
         const std::map<std::string, std::vector<double>>& vectors, const std::string& law_type) {
        CurveParams params;
        params.scalars = scalars;
        params.vectors = vectors;
        const MetricField metric = make_manifold(manifold);
        const Curve curve = make_curve(curve_id, params, metric.dim);
        if (law_type == "parallel") return parallel_law(curve, metric);
        if (law_type == "fermi-walker") return fermi_walker_law(curve, metric);
        if (law_type == "fermi") return fermi_law(curve, metric);
        throw std::invalid_argument("catalog_law supports parallel, fermi-walker, fermi");
      },
      py::arg("manifold"), py::arg("curve"),
      py::arg("scalars") = std::map<std::string, double>{},
      py::arg("vectors") = std::map<std::string, std::vector<double>>{},
      py::arg("law") = "parallel",
      "Builds a named transport law for a catalog manifold and curve.");

  // scenario front end: JSON in, JSON out
  m.def(
      "run_scenario_json",
      [](const std::string& text) {
        const auto j = nlohmann::json::parse(text);
        const Scenario sc = parse_scenario(j, "<string>");
        return report_to_json(run_scenario(sc)).dump();
      },
      py::arg("scenario_json"), "Runs a scenario given as a JSON string; returns the report JSON.");
  m.def(
      "run_scenario_file",
      [](const std::string& path) {
        const Scenario sc = load_scenario(path);
        return report_to_json(run_scenario(sc)).dump();
      },
      py::arg("path"), "Runs a scenario file; returns the report JSON.");
  m.def(
      "trace_scenario_file",
      [](const std::string& path, int points) {
        Scenario sc = load_scenario(path);
        if (points >= 2) sc.trace_points = points;
        if (sc.trace_points < 2) sc.trace_points = 11;
        std::ostringstream out;
        export_trace(run_scenario(sc), out);
        return out.str();
      },
      py::arg("path"), py::arg("points") = 0, "Returns the CSV trace of a scenario file.");

  m.def("manifold_catalog", &manifold_catalog);
  m.def("curve_catalog", &curve_catalog);
  m.def("law_catalog", &law_catalog);
}
