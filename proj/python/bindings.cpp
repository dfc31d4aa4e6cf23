#include "sepvar/catalog.hpp"
#include "sepvar/parse.hpp"
#include "sepvar/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;

namespace {

std::string classify_json(const std::string& p, const std::string& q, bool witness, const std::string& oracle,
                          int precision) {
  sepvar::ReportOptions opts;
  opts.witness = witness;
  if (oracle != "none" && oracle != "geometry" && oracle != "numeric" && oracle != "both")
    throw std::invalid_argument("oracle must be none, geometry, numeric or both");
  opts.geometry = oracle == "geometry" || oracle == "both";
  opts.numeric = oracle == "numeric" || oracle == "both";
  if (precision < 64 || precision > sepvar::kPrecisionCap)
    throw std::invalid_argument("precision must lie in [64, 4096]");
  opts.precision_bits = precision;
  sepvar::Report r = sepvar::build_report(sepvar::parse_poly(p), sepvar::parse_poly(q), opts);
  return sepvar::to_json(r, opts).dump(2);
}

std::vector<std::string> coefficients(const std::string& text) {
  const sepvar::Poly p = sepvar::parse_poly(text);
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(sepvar::to_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact classifier for curves P(x) = Q(y)";
  m.attr("__version__") = "0.1.0";

  py::register_exception<sepvar::ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("classify_json", &classify_json, py::arg("p"), py::arg("q"), py::arg("witness") = false,
        py::arg("oracle") = "none", py::arg("precision") = sepvar::kDefaultPrecision,
        "Report for the pair as a JSON string.");
  m.def("coefficients", &coefficients, py::arg("text"),
        "Coefficients of a polynomial in x, constant term first, as exact fractions.");
  m.def("normalize", [](const std::string& text) { return sepvar::parse_poly(text).to_string("x"); },
        py::arg("text"));
  m.def("catalog", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& e : sepvar::catalog()) out.emplace_back(e.name, e.p, e.q);
    return out;
  });
  m.def("selftest", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& l : sepvar::run_selftest()) out.emplace_back(l.name, l.passed, l.detail);
    return out;
  });
}
