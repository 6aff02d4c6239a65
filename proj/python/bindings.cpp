#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "nbj/errors.hpp"
#include "nbj/orthopoly.hpp"
#include "nbj/report.hpp"
#include "nbj/scheme.hpp"

namespace py = pybind11;

namespace {

std::string poly_eval(const std::string& family, long i, long x, long N, long p) {
  if (family == "krawtchouk") return nbj::krawtchouk(i, x, N, p).str();
  if (family == "eberlein") return nbj::eberlein(i, x, N, p).str();
  if (family == "hahn") return nbj::hahn(i, x, N, p).str();
  throw std::invalid_argument("unknown family '" + family + "'");
}

py::tuple run_checks(int r, int k, int n, const std::vector<std::string>& checks,
                     std::size_t max_vertices, int bases, bool tables) {
  nbj::RunConfig config;
  config.r = r;
  config.k = k;
  config.n = n;
  config.checks = nbj::parse_checks(checks);
  config.max_vertices = max_vertices;
  config.base_count = bases;
  config.include_tables = tables;
  nbj::RunResult result = nbj::run(config);
  return py::make_tuple(result.report.dump(), result.exit_code);
}

std::vector<std::pair<int, int>> domain(int r, int k, int n) {
  std::vector<std::pair<int, int>> out;
  const nbj::Domain dom = nbj::Domain::make(nbj::SchemeParams{r, k, n});
  for (const nbj::BiIndex& ij : dom.indices()) {
    out.emplace_back(ij.i, ij.j);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verifier for the non-binary Johnson association scheme";

  m.def("poly_eval", &poly_eval, py::arg("family"), py::arg("i"), py::arg("x"), py::arg("N"),
        py::arg("p"),
        "Evaluate a Krawtchouk/Eberlein/Hahn polynomial; returns the exact value "
        "as a canonical 'num/den' string.");
  m.def("run_checks_json", &run_checks, py::arg("r"), py::arg("k"), py::arg("n"),
        py::arg("checks") = std::vector<std::string>{"all"}, py::arg("max_vertices") = 5000,
        py::arg("bases") = 3, py::arg("tables") = false,
        "Run the selected checks; returns (report_json, exit_code).");
  m.def("domain", &domain, py::arg("r"), py::arg("k"), py::arg("n"),
        "The sorted index domain D of the scheme.");
  m.def("vertex_count", [](int r, int k, int n) {
    return nbj::vertex_count(nbj::SchemeParams{r, k, n}).get_str();
  });

  py::register_exception<nbj::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<nbj::ResourceError>(m, "ResourceError", PyExc_RuntimeError);
}
