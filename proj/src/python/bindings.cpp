#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blockdet/bpartition.hpp"
#include "blockdet/closed_forms.hpp"
#include "blockdet/errors.hpp"
#include "blockdet/generators.hpp"
#include "blockdet/graph_io.hpp"
#include "blockdet/oracles.hpp"

namespace py = pybind11;
using namespace blockdet;

namespace {

using Matrix = std::vector<std::vector<Weight>>;

// Arbitrary-size values cross the boundary as decimal strings.
py::int_ to_py(const ExactValue& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

py::object to_py(const std::optional<ExactValue>& v) {
  if (!v) return py::none();
  return to_py(*v);
}

template <class F>
auto on_matrix(F f) {
  return [f](const Matrix& a) { return to_py(f(from_matrix(a))); };
}

}  // namespace

PYBIND11_MODULE(_blockdet, m) {
  m.doc() = "Exact determinants and permanents of signed digraphs";

  py::register_exception<InvalidGraph>(m, "InvalidGraph", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("det", on_matrix([](const SignedDigraph& g) { return det_exact(g); }), py::arg("matrix"),
        "Exact determinant (fraction-free elimination).");
  m.def("per", on_matrix([](const SignedDigraph& g) { return per_exact(g); }), py::arg("matrix"),
        "Exact permanent (Ryser), n <= 20.");
  m.def("det_bpartition", on_matrix([](const SignedDigraph& g) { return det_via_bpartitions(g); }),
        py::arg("matrix"));
  m.def("per_bpartition", on_matrix([](const SignedDigraph& g) { return per_via_bpartitions(g); }),
        py::arg("matrix"));
  m.def("det_cycle_cover", on_matrix([](const SignedDigraph& g) { return det_via_cycle_covers(g); }),
        py::arg("matrix"));
  m.def("per_cycle_cover", on_matrix([](const SignedDigraph& g) { return per_via_cycle_covers(g); }),
        py::arg("matrix"));

  m.def("block_count", [](const Matrix& a) { return block_decompose(from_matrix(a)).block_count(); },
        py::arg("matrix"));
  m.def("cut_vertices", [](const Matrix& a) { return block_decompose(from_matrix(a)).cut_vertices; },
        py::arg("matrix"));
  m.def("is_balanced", [](const Matrix& a) { return is_balanced(from_matrix(a)).balanced; },
        py::arg("matrix"));

  m.def("family_matrix", [](const std::string& text) { return gen(parse_family(text)).adjacency(); },
        py::arg("family"), "Adjacency matrix of a family descriptor such as 'complete:4'.");
  m.def("closed_form_det", [](const std::string& text) { return to_py(closed_form_det(parse_family(text))); },
        py::arg("family"), "Closed-form determinant, or None when the family has none.");
  m.def("closed_form_per", [](const std::string& text) { return to_py(closed_form_per(parse_family(text))); },
        py::arg("family"));
  m.def("parse_sdg", [](const std::string& text) { return parse_sdg(text).adjacency(); },
        py::arg("text"));
}
