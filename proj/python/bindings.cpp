#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wsys/cli.hpp"
#include "wsys/dmat.hpp"
#include "wsys/errors.hpp"
#include "wsys/glws.hpp"
#include "wsys/graphs.hpp"
#include "wsys/hopf.hpp"
#include "wsys/invariants.hpp"
#include "wsys/perm.hpp"
#include "wsys/verify.hpp"

namespace py = pybind11;
using namespace wsys;

namespace {

Perm perm_of(const std::string& text, std::optional<std::uint32_t> m) { return parse_perm(text, m); }

std::vector<std::string> coef_strings(const std::vector<Coef>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.get_str());
  return out;
}

py::dict report_dict(const VerifySuiteReport& r) {
  py::dict d;
  d["suite"] = r.name;
  d["experiment"] = r.experiment;
  d["passed"] = r.passed();
  d["count"] = r.count;
  d["failures"] = r.failures;
  d["notes"] = r.notes;
  d["wall_seconds"] = r.wall_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_wsys, m) {
  m.doc() = "Weight systems and interlace polynomials in exact arithmetic";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  const auto perm = py::arg("perm");
  const auto size = py::arg("m") = std::nullopt;

  m.def("wgl", [](const std::string& p, std::optional<std::uint32_t> n) { return to_string(wgl(perm_of(p, n))); },
        perm, size, "Universal gl weight system, canonical text.");
  m.def("feps", [](const std::string& p, std::optional<std::uint32_t> n) { return to_string(feps(perm_of(p, n))); },
        perm, size, "F_eps specialization.");
  m.def("feps_direct",
        [](const std::string& p, std::optional<std::uint32_t> n) { return to_string(feps_direct(perm_of(p, n))); },
        perm, size, "F_eps by the direct subset sum.");
  m.def("faces", [](const std::string& p, std::optional<std::uint32_t> n) { return face_count(perm_of(p, n)); },
        perm, size, "Number of faces.");
  m.def("pivot",
        [](const std::string& p, Orbit2 a, Orbit2 b) { return format_perm(perm_pivot(parse_perm(p), a, b)); },
        perm, py::arg("a"), py::arg("b"), "Pivot of a permutation at two interlacing 2-cycles.");
  m.def(
      "interlace_perm",
      [](const std::string& p, std::optional<std::uint32_t> n) {
        const RatFunc l = interlace_perm(perm_of(p, n));
        return py::make_tuple(to_string(l.num()), l.dpow());
      },
      perm, size, "Interlace rational function as (numerator, power of 1 - z in the denominator).");
  m.def(
      "series",
      [](const std::string& p, std::uint32_t order) { return coef_strings(interlace_perm(parse_perm(p)).series(order)); },
      perm, py::arg("order"), "Series coefficients of the interlace rational function, as fraction strings.");
  m.def("interlace_graph", [](const std::string& g) { return to_string(interlace_graph(parse_graph(g))); },
        py::arg("graph"), "Interlace polynomial of a graph.");
  m.def("skew_char", [](const std::string& g) { return to_string(skew_char(parse_graph(g))); }, py::arg("graph"),
        "Skew characteristic polynomial of a graph.");
  m.def("refined_skew_char", [](const std::string& g) { return to_string(refined_skew_char_graph(parse_graph(g))); },
        py::arg("graph"), "Refined skew characteristic polynomial of a graph.");
  m.def("dmat_of_graph", [](const std::string& g) { return format_dmat(dmat_from_graph(parse_graph(g))); },
        py::arg("graph"), "Delta-matroid of a graph.");
  m.def("interlace_dmat", [](const std::string& d) { return to_string(interlace_dmat(parse_dmat(d))); },
        py::arg("dmat"), "Interlace polynomial of a delta-matroid.");
  m.def(
      "primitive_feps",
      [](const std::string& p) {
        return to_string(primitive_eval([](const Perm& b) { return feps(b); }, parse_perm(p)));
      },
      perm, "F_eps of the primitive projection of a chord diagram.");

  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, std::uint32_t max_m, std::uint32_t max_chords, std::uint32_t max_vertices,
         std::uint32_t order, std::uint64_t seed) {
        VerifyBounds b;
        b.max_m = max_m;
        b.max_chords = max_chords;
        b.max_vertices = max_vertices;
        b.order = order;
        b.seed = seed;
        VerifySuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, b);
        }
        return report_dict(r);
      },
      py::arg("suite"), py::arg("max_m") = 7, py::arg("max_chords") = 5, py::arg("max_vertices") = 5,
      py::arg("order") = 12, py::arg("seed") = 1, "Run one verification suite.");
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end; returns (exit code, stdout, stderr).");
}
