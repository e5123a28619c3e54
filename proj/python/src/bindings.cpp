#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <vector>

#include "toughspec/certify.hpp"
#include "toughspec/constructions.hpp"
#include "toughspec/graph6.hpp"
#include "toughspec/spectral.hpp"
#include "toughspec/thresholds.hpp"
#include "toughspec/toughness.hpp"

namespace py = pybind11;
using namespace toughspec;

namespace {

std::vector<Vertex> to_list(const VertexSet& s) { return {s.begin(), s.end()}; }

SearchBudget make_budget(std::uint64_t max_subsets) {
  SearchBudget b;
  b.max_subsets = max_subsets;
  return b;
}

py::dict report_dict(const CertReport& r) {
  py::dict out;
  out["theorem"] = std::string(to_string(r.theorem));
  out["d"] = r.d;
  out["b"] = r.b;
  out["eigen_index"] = r.eigen_index;
  out["eigenvalue"] = r.eigenvalue_used;
  out["threshold"] = r.threshold.value;
  out["branch"] = std::string(to_string(r.threshold.branch));
  out["comparison"] = std::string(to_string(r.comparison));
  out["verdict"] = std::string(to_string(r.verdict));
  out["margin"] = r.margin;
  out["reason"] = r.reason;
  if (r.cross_check) {
    out["cross_check"] = std::string(to_string(r.cross_check->status));
    out["violating_set"] = r.cross_check->violating_set ? py::cast(to_list(*r.cross_check->violating_set))
                                                        : py::none();
  } else {
    out["cross_check"] = py::none();
    out["violating_set"] = py::none();
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph toughness, adjacency spectra and spectral toughness certificates";

  static py::exception<Error> base(m, "ToughspecError");
  static py::exception<Error> parse_error(m, "Graph6Error", base.ptr());
  static py::exception<Error> undefined(m, "UndefinedToughnessError", base.ptr());
  static py::exception<Error> budget(m, "BudgetExceededError", base.ptr());
  static py::exception<Error> infeasible(m, "InfeasibleError", base.ptr());
  static py::exception<Error> contradiction(m, "ContradictionError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::InvalidArgument: PyErr_SetString(PyExc_ValueError, e.what()); return;
        case ErrorKind::Parse: py::set_error(parse_error, e.what()); return;
        case ErrorKind::UndefinedToughness: py::set_error(undefined, e.what()); return;
        case ErrorKind::BudgetExceeded: py::set_error(budget, e.what()); return;
        case ErrorKind::Infeasible: py::set_error(infeasible, e.what()); return;
        case ErrorKind::Contradiction: py::set_error(contradiction, e.what()); return;
        case ErrorKind::NonRealSpectrum: py::set_error(base, e.what()); return;
      }
      py::set_error(base, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("edges", &Graph::edges)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("write_graph6", &write_graph6);
  m.def("petersen", &petersen);
  m.def("complete", &complete);
  m.def("cycle", &cycle);
  m.def("path", &path);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("is_connected", &is_connected);
  m.def("is_regular", &is_regular);

  m.def("eigenvalues", [](const Graph& g) { return eigenvalues(g).values; },
        "Adjacency eigenvalues in non-increasing order.");
  m.def("lambda_k", py::overload_cast<const Graph&, int>(&lambda_k), py::arg("g"), py::arg("k"));

  m.def("alpha_d", &alpha_d);
  m.def("phi", [](int d, int b) {
    const auto t = phi(ThresholdParams::make(d, b));
    return py::make_tuple(t.value, std::string(to_string(t.branch)));
  });
  m.def("psi", [](int d, int b) {
    const auto t = psi(ThresholdParams::make(d, b));
    return py::make_tuple(t.value, std::string(to_string(t.branch)));
  });

  m.def(
      "toughness",
      [](const Graph& g, std::uint64_t max_subsets) {
        py::gil_scoped_release release;
        const auto r = toughness_exact(g, make_budget(max_subsets));
        py::gil_scoped_acquire acquire;
        return py::make_tuple(r.tau.num(), r.tau.den(), to_list(r.witness), r.component_count);
      },
      py::arg("g"), py::arg("max_subsets") = kDefaultSubsetBudget,
      "Returns (numerator, denominator, witness, components).");
  m.def(
      "is_one_over_b_tough",
      [](const Graph& g, int b, std::uint64_t max_subsets) {
        ToughnessDecision dec;
        {
          py::gil_scoped_release release;
          dec = is_one_over_b_tough(g, b, make_budget(max_subsets));
        }
        py::object witness = dec.violating_set ? py::cast(to_list(*dec.violating_set)) : py::none();
        return py::make_tuple(dec.tough, witness);
      },
      py::arg("g"), py::arg("b"), py::arg("max_subsets") = kDefaultSubsetBudget);

  m.def(
      "certify",
      [](const Graph& g, int b, const std::string& theorem, bool cross_check) {
        CertReport r = certify(g, b, parse_theorem(theorem));
        if (cross_check && r.verdict == Verdict::Certified) run_cross_check(g, r);
        return report_dict(r);
      },
      py::arg("g"), py::arg("b"), py::arg("theorem") = "3", py::arg("cross_check") = false);

  m.def(
      "construct",
      [](const std::string& family, int d, int b) {
        const auto ex = build_extremal(ExtremalSpec{parse_family(family), d, b});
        return py::make_tuple(ex.graph, to_list(ex.hub));
      },
      py::arg("family"), py::arg("d"), py::arg("b"), "Returns (graph, hub).");
  m.def("is_feasible", [](const std::string& family, int d, int b) {
    return is_feasible(ExtremalSpec{parse_family(family), d, b});
  });

  m.def("random_connected_regular", &random_connected_regular, py::arg("n"), py::arg("d"), py::arg("seed"));
}
