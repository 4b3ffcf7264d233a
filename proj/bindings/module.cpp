#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "ivalg/analysis.hpp"
#include "ivalg/division.hpp"
#include "ivalg/embedding.hpp"
#include "ivalg/lp_json.hpp"
#include "ivalg/text.hpp"

namespace py = pybind11;
using namespace ivalg;

namespace {

using A4Tuple = std::array<double, 4>;

A4 as_a4(const A4Tuple& t) { return {t[0], t[1], t[2], t[3]}; }

A4Tuple as_tuple(const A4& m) { return {m.x1, m.x2, m.x3, m.x4}; }

}  // namespace

PYBIND11_MODULE(ivalg, m) {
  m.doc() =
      "Difference classes of intervals: normed vector space operations, the "
      "four-dimensional algebra embedding, division, probes, and an interval "
      "simplex.";

  py::class_<GInterval>(m, "GInterval")
      .def(py::init([](double inf, double sup) { return GInterval{inf, sup}; }),
           py::arg("inf"), py::arg("sup"))
      .def_readonly("inf", &GInterval::inf)
      .def_readonly("sup", &GInterval::sup)
      .def("__repr__", [](const GInterval& a) { return to_text(a); })
      .def(
          "__eq__",
          [](const GInterval& a, const GInterval& b) {
            return a.inf == b.inf && a.sup == b.sup;
          },
          py::is_operator())
      .def("__add__", [](const GInterval& a, const GInterval& b) { return add(a, b); })
      .def("__sub__", [](const GInterval& a, const GInterval& b) { return sub(a, b); })
      .def("__neg__", [](const GInterval& a) { return neg(a); })
      .def("__mul__", [](const GInterval& a, const GInterval& b) { return bullet(a, b); })
      .def("__mul__", [](const GInterval& a, double t) { return scalar_mul(t, a); })
      .def("__rmul__", [](const GInterval& a, double t) { return scalar_mul(t, a); });

  m.def("point", [](double t) { return GInterval{t, t}; }, py::arg("value"));
  m.def(
      "parse", [](const std::string& s, double tol) { return parse_class(s, tol); },
      py::arg("text"), py::arg("tol") = kTol);
  m.def(
      "to_text", [](const GInterval& a, double tol) { return to_text(a, tol); },
      py::arg("value"), py::arg("tol") = kTol);
  m.def(
      "evaluate",
      [](const std::string& s, double tol) { return eval_expression(s, tol); },
      py::arg("text"), py::arg("tol") = kTol);

  m.def("is_proper", &is_proper, py::arg("value"));
  m.def("is_improper", &is_improper, py::arg("value"));
  m.def("is_scalar", &is_scalar, py::arg("value"), py::arg("tol") = kTol);
  m.def("length", &length, py::arg("value"));
  m.def("center", &center, py::arg("value"));
  m.def("norm", &norm, py::arg("value"));
  m.def("distance", &distance, py::arg("a"), py::arg("b"));

  m.def("bullet", &bullet, py::arg("a"), py::arg("b"));
  m.def("q2", &q2, py::arg("value"));
  m.def("poly_eval", &poly_eval, py::arg("coeffs"), py::arg("x"));
  m.def(
      "divide",
      [](const GInterval& dividend, const GInterval& divisor, double tol) {
        const DivisionResult r = divide(dividend, divisor, tol);
        return py::make_tuple(r.quotient, r.remainder, r.exact);
      },
      py::arg("dividend"), py::arg("divisor"), py::arg("tol") = kTol,
      "Returns (quotient, remainder, exact).");

  m.def(
      "phi_bar", [](const GInterval& a) { return as_tuple(phi_bar(a)); },
      py::arg("value"));
  m.def("psi", [](const A4Tuple& t) { return psi(as_a4(t)); }, py::arg("element"));
  m.def(
      "a4_mul",
      [](const A4Tuple& x, const A4Tuple& y) {
        return as_tuple(a4_mul(as_a4(x), as_a4(y)));
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "a4_inverse", [](const A4Tuple& x) { return as_tuple(a4_inverse(as_a4(x))); },
      py::arg("x"));
  m.def(
      "a4_is_invertible",
      [](const A4Tuple& x, double tol) { return a4_is_invertible(as_a4(x), tol); },
      py::arg("x"), py::arg("tol") = kTol);
  m.def(
      "a4_leq",
      [](const A4Tuple& x, const A4Tuple& y, double tol) {
        return a4_leq(as_a4(x), as_a4(y), tol);
      },
      py::arg("x"), py::arg("y"), py::arg("tol") = kTol,
      "True/False when comparable, None otherwise.");
  m.def(
      "in_phi_bar_image",
      [](const A4Tuple& x, double tol) { return in_phi_bar_image(as_a4(x), tol); },
      py::arg("x"), py::arg("tol") = kTol);

  py::enum_<DirectionCone>(m, "DirectionCone")
      .value("All", DirectionCone::All)
      .value("Widening", DirectionCone::Widening)
      .value("LowerDominant", DirectionCone::LowerDominant);

  m.def("unit_directions", &unit_directions, py::arg("count"), py::arg("cone"));
  m.def(
      "continuity_probe",
      [](const ClassMap& f, const GInterval& x0, double eps) {
        return continuity_probe(f, x0, eps);
      },
      py::arg("f"), py::arg("x0"), py::arg("eps"),
      "Largest grid-checked radius, or None.");
  m.def("differential_candidate", &differential_candidate, py::arg("x0"));

  py::class_<ProbeRow>(m, "ProbeRow")
      .def_readonly("radius", &ProbeRow::radius)
      .def_readonly("worst_ratio", &ProbeRow::worst_ratio)
      .def_readonly("witness", &ProbeRow::witness);
  py::class_<ProbeReport>(m, "ProbeReport")
      .def_readonly("rows", &ProbeReport::rows)
      .def("to_csv", [](const ProbeReport& r) { return to_csv(r); });

  m.def("diff_probe", &diff_probe, py::arg("f"), py::arg("x0"), py::arg("L"),
        py::arg("radii"), py::arg("directions"));
  m.def("default_radii", &default_radii, py::arg("first") = 1e-2,
        py::arg("count") = 5, py::arg("step") = 0.1);

  m.def(
      "solve_lp_text",
      [](const std::string& text) {
        return lp_solution_to_json_text(solve(lp_from_json_text(text)));
      },
      py::arg("json_text"), "Solves the JSON-encoded program, returns JSON text.");
}
