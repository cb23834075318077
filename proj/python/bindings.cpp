#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nearcurve/arcs.hpp"
#include "nearcurve/cli.hpp"
#include "nearcurve/config.hpp"
#include "nearcurve/congruence.hpp"
#include "nearcurve/diophantine.hpp"
#include "nearcurve/errors.hpp"
#include "nearcurve/fit.hpp"
#include "nearcurve/strip.hpp"

namespace py = pybind11;
using namespace nearcurve;

namespace {

// Big integers cross the boundary as decimal strings; the Python layer
// converts them with int().
using RawPoint = std::pair<std::int64_t, std::string>;

PointSet to_points(const std::vector<RawPoint>& raw) {
  PointSet out;
  for (const auto& [x, y] : raw) out.push_back({x, parse_integer(y)});
  return out;
}

std::vector<RawPoint> from_points(const PointSet& pts) {
  std::vector<RawPoint> out;
  for (const LatticePoint& p : pts) out.emplace_back(p.x, to_string(p.y));
  return out;
}

std::vector<BigRational> to_rationals(const std::vector<std::string>& texts) {
  std::vector<BigRational> out;
  for (const std::string& t : texts) out.push_back(parse_rational(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_nearcurve, m) {
  m.doc() = "Exact integer-point counting near polynomial curves";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CertificationError>(m, "CertificationError", PyExc_ArithmeticError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

  m.def(
      "count_points",
      [](const std::vector<std::string>& coefficients, const std::string& X, const std::string& delta, unsigned jobs) {
        const StripSpec spec(RealPolynomial::rational(to_rationals(coefficients)), parse_rational(X),
                             parse_rational(delta));
        py::gil_scoped_release release;
        return from_points(count_points(spec, jobs).points);
      },
      py::arg("coefficients"), py::arg("X"), py::arg("delta"), py::arg("jobs") = 1);

  m.def(
      "lambda_det", [](const std::vector<RawPoint>& pts) { return to_string(lambda_det(to_points(pts)).value); },
      py::arg("points"));

  m.def(
      "interpolate",
      [](const std::vector<RawPoint>& pts, std::size_t cap) {
        const RationalPolynomial p = interpolate(to_points(pts), cap);
        std::vector<std::string> out;
        for (const BigRational& c : p.coefficients()) out.push_back(to_string(c));
        return out;
      },
      py::arg("points"), py::arg("cap"));

  m.def(
      "compute_R",
      [](const std::vector<RawPoint>& pts, std::size_t n, unsigned jobs) {
        ROptions o;
        o.jobs = jobs;
        const PointSet points = to_points(pts);
        py::gil_scoped_release release;
        return compute_R(points, n, o).R;
      },
      py::arg("points"), py::arg("n"), py::arg("jobs") = 1);

  m.def(
      "decompose",
      [](const std::vector<RawPoint>& pts, std::size_t n, const std::string& delta) {
        std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
        const Decomposition d = decompose(to_points(pts), n, parse_rational(delta));
        for (const Group& g : d.groups) {
          out.emplace_back(to_string(g.kind), g.first, g.last);
        }
        return out;
      },
      py::arg("points"), py::arg("n"), py::arg("delta") = "0");

  m.def(
      "congruence_count",
      [](const std::vector<std::string>& coefficients, std::int64_t a, std::int64_t b) {
        return count_congruence_solutions(RationalPolynomial(to_rationals(coefficients)), {a, b}).W;
      },
      py::arg("coefficients"), py::arg("a"), py::arg("b"));

  m.def(
      "convergents",
      [](const std::string& alpha, const std::string& s_max) {
        std::vector<std::pair<std::string, std::string>> out;
        const ConvergentExpansion e = convergents(RealNumber::parse(alpha), parse_integer(s_max));
        for (const Approximation& a : e.convergents) {
          out.emplace_back(to_string(a.r), to_string(a.s));
        }
        return out;
      },
      py::arg("alpha"), py::arg("s_max"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line interface in-process; returns (exit code, stdout, stderr).");
}
