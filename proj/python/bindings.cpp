#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "novdef/cli.hpp"
#include "novdef/dim2.hpp"
#include "novdef/io.hpp"
#include "novdef/scalar_io.hpp"

namespace py = pybind11;
using namespace novdef;

namespace {

CSeries series(const std::string& text) { return parse_series<Complex>(text); }

py::dict verdict_dict(const EquivVerdict& v) {
  py::dict d;
  d["verdict"] = verdict_name(v.verdict);
  d["reason"] = v.reason;
  if (v.epsilon) d["epsilon"] = v.epsilon->to_string();
  if (v.mu) d["mu"] = v.mu->to_string();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Novikov deformations and transposed Poisson algebras";

  py::register_exception<Error>(m, "NovdefError", PyExc_ValueError);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one CLI command line; returns (exit_code, stdout, stderr).");

  m.def(
      "check_identity",
      [](const std::string& text, const std::string& identity) {
        auto id = parse_identity(identity);
        if (!id) throw ParseError("unknown identity " + identity);
        auto doc = parse_algebra_file(text);
        auto rep = check_identity(doc.algebra, *id);
        return py::make_tuple(rep.passed, rep.to_string(doc.algebra.labels()));
      },
      py::arg("document"), py::arg("identity"));

  m.def(
      "series_inverse", [](const std::string& s) { return series(s).inverse().to_string(); }, py::arg("series"));

  m.def(
      "family2d_equiv",
      [](const std::string& a, const std::string& b, const std::string& a2, const std::string& b2) {
        return verdict_dict(family2d_equiv(series(a), series(b), series(a2), series(b2)));
      },
      py::arg("a"), py::arg("b"), py::arg("a2"), py::arg("b2"));

  m.def(
      "normalize_family",
      [](const std::string& a, const std::string& b) {
        auto nf = normalize_family(series(a), series(b));
        py::dict d;
        d["case"] = normal_case_name(nf.kind);
        d["description"] = nf.describe();
        d["a"] = nf.a.to_string();
        d["b"] = nf.b.to_string();
        d["epsilon"] = nf.epsilon.to_string();
        d["mu"] = nf.mu.to_string();
        return d;
      },
      py::arg("a"), py::arg("b"));

  m.def("operad_dims", &operad_dims, py::arg("n"));
}
