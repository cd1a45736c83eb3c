#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "singular/continued_fraction.hpp"
#include "singular/distribution.hpp"
#include "singular/quad_surd.hpp"
#include "singular/rational.hpp"
#include "singular/singular_function.hpp"
#include "singular/stern_brocot.hpp"
#include "singular/xi_tree.hpp"

namespace py = pybind11;
using namespace singular;

namespace {

// Python ints cross the boundary as decimal strings.
BigInt to_bigint(const py::handle& value) { return BigInt(py::str(value).cast<std::string>()); }

py::int_ to_pyint(const BigInt& value) { return py::int_(py::str(value.str())); }

Rational to_rational(const py::handle& value) {
  if (py::isinstance<Rational>(value)) return value.cast<Rational>();
  if (py::isinstance<py::bool_>(value)) throw py::type_error("bool is not a rational");
  if (py::isinstance<py::int_>(value)) return Rational(to_bigint(value));
  if (py::isinstance<py::str>(value)) return Rational::parse(value.cast<std::string>());
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator") && !py::isinstance<py::float_>(value)) {
    return Rational(to_bigint(value.attr("numerator")), to_bigint(value.attr("denominator")));
  }
  throw py::type_error("expected Rational, int, fractions.Fraction or a 'p/q' string");
}

Lambda to_lambda(const py::handle& value) {
  if (py::isinstance<QuadSurd>(value)) return Lambda(value.cast<QuadSurd>());
  if (py::isinstance<py::str>(value)) return Lambda::parse(value.cast<std::string>());
  return Lambda(to_rational(value));
}

std::vector<Digit> to_vector(std::span<const Digit> s) { return {s.begin(), s.end()}; }

SequenceKind to_kind(const std::string& kind) {
  if (kind == "xi") return SequenceKind::xi;
  if (kind == "stern-brocot" || kind == "stern_brocot") return SequenceKind::stern_brocot;
  throw py::value_error("kind must be 'xi' or 'stern-brocot'");
}

}  // namespace

PYBIND11_MODULE(_singular, m) {
  m.doc() = "Exact evaluation of the singular functions g_lambda and the Xi_n sequences";

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const py::object& value) { return to_rational(value); }), py::arg("value"))
      .def(py::init([](const py::int_& p, const py::int_& q) { return Rational(to_bigint(p), to_bigint(q)); }),
           py::arg("numerator"), py::arg("denominator"))
      .def_static("parse", &Rational::parse)
      .def_static("parse_decimal", &Rational::parse_decimal)
      .def_property_readonly("numerator", [](const Rational& r) { return to_pyint(r.numerator()); })
      .def_property_readonly("denominator", [](const Rational& r) { return to_pyint(r.denominator()); })
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__float__", [](const Rational& r) { return std::stod(to_decimal(r, 17)); })
      .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); })
      .def("to_decimal", [](const Rational& r, unsigned digits) { return to_decimal(r, digits); }, py::arg("digits"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);

  py::class_<QuadSurd>(m, "QuadSurd")
      .def(py::init([](const py::object& a, const py::object& b) { return QuadSurd(to_rational(a), to_rational(b)); }),
           py::arg("a"), py::arg("b") = py::int_(0))
      .def_static("parse", &QuadSurd::parse)
      .def_static("tau", &QuadSurd::tau)
      .def_static("tau_squared", &QuadSurd::tau_squared)
      .def_static("sqrt5", &QuadSurd::sqrt5)
      .def_property_readonly("a", &QuadSurd::rational_part)
      .def_property_readonly("b", &QuadSurd::surd_part)
      .def("conjugate", &QuadSurd::conjugate)
      .def("norm", &QuadSurd::norm)
      .def("__str__", &QuadSurd::str)
      .def("__repr__", [](const QuadSurd& q) { return "QuadSurd('" + q.str() + "')"; })
      .def("__float__", [](const QuadSurd& q) { return std::stod(to_decimal(q, 17)); })
      .def("to_decimal", [](const QuadSurd& q, unsigned digits) { return to_decimal(q, digits); }, py::arg("digits"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self);

  m.def("expand_rcf", [](const py::object& x) { return to_vector(expand_rcf(to_rational(x)).quotients()); },
        py::arg("x"), "Partial quotients [a1, ..., am] of x in (0, 1]; last quotient >= 2, empty for 1.");
  m.def("expand_rrcf", [](const py::object& x) { return to_vector(expand_rrcf(to_rational(x)).digits()); },
        py::arg("x"), "Reduced-expansion digits [b1, ..., bl] of x in (0, 1), all >= 2.");
  m.def("value_rcf", [](std::vector<Digit> q) { return value_rcf(RegularCF(std::move(q))); }, py::arg("quotients"));
  m.def("value_rrcf", [](std::vector<Digit> d) { return value_rrcf(ReducedRCF(std::move(d))); }, py::arg("digits"));
  m.def("rcf_to_rrcf", [](std::vector<Digit> q) { return to_vector(rcf_to_rrcf(RegularCF(std::move(q))).digits()); },
        py::arg("quotients"));

  m.def("g_series", [](const py::object& x, const py::object& lam) { return g_series(to_rational(x), to_lambda(lam)); },
        py::arg("x"), py::arg("lam"), "g_lambda(x) from the alternating series over partial quotients.");
  m.def("g_inductive",
        [](const py::object& x, const py::object& lam) { return g_inductive(to_rational(x), to_lambda(lam)); },
        py::arg("x"), py::arg("lam"), "g_lambda(x) by walking the Stern-Brocot tree.");
  m.def("g_tau2", [](const py::object& x) { return g_tau2(to_rational(x)); }, py::arg("x"));
  m.def("question_mark", [](const py::object& x) {
        Rational r = to_rational(x);
        return r.is_zero() ? Rational{0} : question_mark(expand_rcf(r)); }, py::arg("x"));

  m.def("fibonacci", [](unsigned n) { return to_pyint(fibonacci(n)); }, py::arg("n"));
  m.def("theta", [](unsigned k) {
        std::vector<std::pair<Rational, unsigned>> out;
        for (const auto& node : theta(k)) out.emplace_back(node.value(), node.level());
        return out; }, py::arg("k"), "Sorted (value, level) pairs of the level-k tree nodes.");
  m.def("xi", [](unsigned n) {
        if (n > kMaxMaterializedXi) throw py::value_error("n is limited to 30");
        return xi(n).elements(); }, py::arg("n"));
  m.def("stern_brocot", [](unsigned n) { return stern_brocot_level(n).elements(); }, py::arg("n"));
  m.def("subtree_count", [](unsigned k, unsigned m) { return to_pyint(subtree_count(k, m)); }, py::arg("k"),
        py::arg("m"));

  m.def("empirical_cdf",
        [](const std::string& kind, unsigned n, const py::object& x) { return empirical_cdf(to_kind(kind), n, to_rational(x)); },
        py::arg("kind"), py::arg("n"), py::arg("x"));
  m.def("verify_theorem1", [](const py::object& x, unsigned n_max, const py::object& tol) {
        Theorem1Report report = verify_theorem1(to_rational(x), n_max, to_rational(tol));
        py::list rows;
        for (const auto& r : report.rows) {
          py::dict row;
          row["n"] = r.n;
          row["empirical"] = r.empirical;
          row["target"] = r.target;
          row["abs_error"] = r.abs_error;
          row["abs_error_decimal"] = r.abs_error_decimal;
          rows.append(row);
        }
        py::dict out;
        out["x"] = report.x;
        out["tolerance"] = report.tolerance;
        out["rows"] = rows;
        out["passed"] = report.passed;
        return out; }, py::arg("x"), py::arg("n_max") = 25, py::arg("tol") = Rational(1, 50));
  m.def("mediant_ratio", [](const py::object& x, const py::object& y, unsigned n_of_pair, unsigned mm) {
        return mediant_ratio(to_rational(x), to_rational(y), n_of_pair, mm); },
        py::arg("x"), py::arg("y"), py::arg("n_of_pair"), py::arg("m"));
  m.def("fibonacci_ratio_limit", &fibonacci_ratio_limit, py::arg("j"));
}
