#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "siegel/cache.hpp"
#include "siegel/congruence.hpp"
#include "siegel/errors.hpp"
#include "siegel/expr.hpp"
#include "siegel/igusa.hpp"
#include "siegel/numtheory.hpp"

namespace py = pybind11;
using namespace siegel;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.num().get_str())), py::int_(py::str(q.den().get_str())));
}

Rational from_python(const py::handle& v) {
  return Rational::parse(py::str(v).cast<std::string>());
}

TIndex to_index(const py::tuple& t) {
  if (t.size() != 3) throw py::value_error("index must be a tuple (m, n, r)");
  return {t[0].cast<std::int64_t>(), t[1].cast<std::int64_t>(), t[2].cast<std::int64_t>()};
}

py::tuple from_index(const TIndex& t) { return py::make_tuple(t.m, t.n, t.r); }

template <class S>
py::dict coefficient_dict(const Expansion<S>& f) {
  py::dict out;
  for (std::size_t i = 0; i < f.layout().size(); ++i) {
    if (f.at_position(i).is_zero()) continue;
    if constexpr (std::is_same_v<S, Rational>) {
      out[from_index(f.layout().at(i))] = to_fraction(f.at_position(i));
    } else {
      out[from_index(f.layout().at(i))] = f.at_position(i).residue();
    }
  }
  return out;
}

py::dict certificate_dict(const cong::Certificate& c) {
  py::dict d;
  d["claim"] = c.claim;
  d["prime"] = c.prime;
  d["weight"] = c.weight;
  d["verdict"] = cong::to_string(c.verdict);
  d["witness"] = c.witness ? py::object(from_index(*c.witness)) : py::none();
  d["assumptions"] = c.assumptions;
  py::dict counts;
  for (const auto& [k, v] : c.counts) counts[py::str(k)] = v;
  d["counts"] = counts;
  d["text"] = c.serialize();
  return d;
}

}  // namespace

PYBIND11_MODULE(_siegel, m) {
  m.doc() = "Exact Fourier expansions of degree-2 Siegel modular forms";

  py::register_exception<Error>(m, "SiegelError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InsufficientBound>(m, "InsufficientBound", PyExc_ValueError);
  py::register_exception<NotPIntegral>(m, "NotPIntegral", PyExc_ArithmeticError);

  m.def("bernoulli", [](int n) { return to_fraction(nt::bernoulli(n)); });
  m.def("kronecker", &nt::kronecker, py::arg("D"), py::arg("m"));
  m.def("cohen_h", [](int r, std::int64_t N) { return to_fraction(nt::cohen_h(r, N)); },
        py::arg("r"), py::arg("N"));

  py::class_<QExpansion>(m, "QExpansion")
      .def_property_readonly("weight", &QExpansion::weight)
      .def_property_readonly("trace_bound", &QExpansion::trace_bound)
      .def("coeff", [](const QExpansion& f, const py::tuple& t) { return to_fraction(f.coeff(to_index(t))); })
      .def("coefficients", &coefficient_dict<Rational>)
      .def("serialize", &serialize<Rational>)
      .def("reduce", &reduce_mod_p, py::arg("p"))
      .def("truncated", &QExpansion::truncated)
      .def("__add__", &add<Rational>)
      .def("__sub__", &sub<Rational>)
      .def("__mul__", &mul<Rational>)
      .def("__rmul__", [](const QExpansion& f, const py::object& c) { return scale(from_python(c), f); })
      .def("__eq__", [](const QExpansion& a, const QExpansion& b) { return a == b; });

  py::class_<ModPExpansion>(m, "ModPExpansion")
      .def_property_readonly("weight", &ModPExpansion::weight)
      .def_property_readonly("prime", [](const ModPExpansion& f) { return f.domain().prime; })
      .def_property_readonly("trace_bound", &ModPExpansion::trace_bound)
      .def("coeff", [](const ModPExpansion& f, const py::tuple& t) { return f.coeff(to_index(t)).residue(); })
      .def("coefficients", &coefficient_dict<ModP>)
      .def("serialize", &serialize<ModP>)
      .def("theta", &theta_op<ModP>)
      .def("min_matrix", [](const ModPExpansion& f) -> py::object {
        const auto r = cong::min_matrix(f);
        return r.value ? py::object(from_index(*r.value)) : py::none();
      })
      .def("is_zero", &ModPExpansion::is_zero)
      .def("__sub__", &sub<ModP>)
      .def("__eq__", [](const ModPExpansion& a, const ModPExpansion& b) { return a == b; });

  m.def("parse_expansion", &parse_q_expansion);

  py::class_<igusa::GeneratorSet>(m, "GeneratorSet")
      .def_readonly("trace_bound", &igusa::GeneratorSet::trace_bound)
      .def("__getitem__", &igusa::GeneratorSet::by_name, py::return_value_policy::reference_internal)
      .def_static("names", &igusa::GeneratorSet::names);

  m.def(
      "build_generators",
      [](std::int64_t bound, std::optional<std::string> cache_dir) {
        py::gil_scoped_release release;
        if (!cache_dir) return igusa::build_generators(bound);
        ExpansionCache cache(*cache_dir, igusa::kFormulaVersion);
        return igusa::build_generators(bound, &cache);
      },
      py::arg("trace_bound") = 12, py::arg("cache_dir") = py::none());

  m.def("verify_x35_mod23", [](const igusa::GeneratorSet& g, std::int64_t n) {
        return certificate_dict(cong::verify_x35_mod23(g, n));
      }, py::arg("generators"), py::arg("scan_bound") = 12);
  m.def("verify_theta_example", [](const igusa::GeneratorSet& g, std::int64_t n) {
        return certificate_dict(cong::verify_theta_example(g, n));
      }, py::arg("generators"), py::arg("scan_bound") = 10);
  m.def("sturm", [](const ModPExpansion& f, int k) {
        return certificate_dict(k % 2 == 0 ? cong::sturm_even(f, k) : cong::sturm_odd(f, k));
      }, py::arg("f"), py::arg("weight"));

  py::class_<expr::FormExpr>(m, "FormExpr")
      .def_property_readonly("weight", &expr::FormExpr::weight)
      .def("__str__", &expr::FormExpr::to_string)
      .def("__eq__", [](const expr::FormExpr& a, const expr::FormExpr& b) { return a == b; });
  m.def("parse", [](const std::string& s) { return expr::parse(s); });
  m.def("eval", [](const expr::FormExpr& e, const igusa::GeneratorSet& g, std::int64_t bound) {
        return expr::eval(e, g, bound);
      }, py::arg("expr"), py::arg("generators"), py::arg("trace_bound") = -1);
  m.def("eval_mod_p", [](const expr::FormExpr& e, const igusa::GeneratorSet& g, std::int64_t p, std::int64_t bound) {
        return expr::eval_mod_p(e, g, p, bound);
      }, py::arg("expr"), py::arg("generators"), py::arg("p"), py::arg("trace_bound") = -1);
}
