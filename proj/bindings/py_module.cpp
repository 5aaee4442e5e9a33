#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sfield/axiom_lab.hpp"
#include "sfield/expr.hpp"

namespace py = pybind11;
using namespace sfield;

namespace {

Context context_from_spec(const std::string& spec) {
    if (spec == "rational") return Context::rationals();
    if (spec == "integer") return Context::integers();
    if (spec.rfind("gf:", 0) == 0) return Context::gf(std::stoll(spec.substr(3)));
    throw ConstructionError("unknown field '" + spec + "'; use rational, integer or gf:<p>");
}

SElement eval_text(const std::string& text, const std::string& field) {
    ExprPtr ast = parse(text);
    return evaluate(*ast, context_from_spec(field));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact pair-model arithmetic with a well-defined division by zero";
    m.attr("__version__") = "0.1.0";

    // Translators run newest-first, so the base class goes in first.
    py::register_exception<Error>(m, "SFieldError");
    py::register_exception<BackendMismatch>(m, "BackendMismatch");
    py::register_exception<NotInvertible>(m, "NotInvertible");
    py::register_exception<NotAScalar>(m, "NotAScalar");
    py::register_exception<ConstructionError>(m, "ConstructionError");
    py::register_exception<IndeterminateDivision>(m, "IndeterminateDivision");
    py::register_exception<LexError>(m, "LexError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<EvalError>(m, "EvalError");

    py::class_<Context>(m, "Context")
        .def_static("rationals", &Context::rationals)
        .def_static("integers", &Context::integers)
        .def_static("gf", &Context::gf, py::arg("p"))
        .def_property_readonly("modulus", &Context::modulus)
        .def_property_readonly("is_field", &Context::is_field)
        .def(py::self == py::self)
        .def("__repr__", [](const Context& c) { return "Context(" + c.str() + ")"; })
        .def("__str__", &Context::str);

    py::class_<Scalar>(m, "Scalar")
        .def_static(
            "rational",
            [](long long num, long long den) { return Scalar::rational(num, den); },
            py::arg("num"), py::arg("den") = 1)
        .def_static("integer", [](long long v) { return Scalar::integer(v); },
                    py::arg("value"))
        .def_static("gf", [](long long v, std::int64_t p) { return Scalar::gf(v, p); },
                    py::arg("value"), py::arg("p"))
        .def_static("zero", &Scalar::zero, py::arg("ctx"))
        .def_static("one", &Scalar::one, py::arg("ctx"))
        .def_property_readonly("context", &Scalar::context)
        .def_property_readonly("is_zero", &Scalar::is_zero)
        .def_property_readonly("is_one", &Scalar::is_one)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("inverse", &Scalar::inverse)
        .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.str() + ")"; })
        .def("__str__", &Scalar::str);

    py::class_<SElement>(m, "SElement")
        .def(py::init<Scalar, Scalar>(), py::arg("x"), py::arg("y"))
        .def_static("zero", &SElement::zero, py::arg("ctx"))
        .def_static("one", &SElement::one, py::arg("ctx"))
        .def_static("base_unit", &SElement::base_unit, py::arg("ctx"))
        .def_property_readonly("x", &SElement::x)
        .def_property_readonly("y", &SElement::y)
        .def_property_readonly("context", &SElement::context)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("alpha_index", &SElement::alpha_index)
        .def("is_scalar", &SElement::is_scalar)
        .def("coords_str", &SElement::coords_str)
        .def("canonical_str", &SElement::canonical_str)
        .def("__repr__",
             [](const SElement& s) { return "SElement" + s.coords_str(); })
        .def("__str__", &SElement::coords_str);

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("x", &Decomposition::x)
        .def_readonly("y", &Decomposition::y)
        .def("__repr__", [](const Decomposition& d) {
            return "Decomposition(x=" + d.x.str() + ", y=" + d.y.str() + ")";
        });

    m.def("embed_scalar", &embed_scalar, py::arg("r"));
    m.def("extract_scalar", &extract_scalar, py::arg("s"));
    m.def("standard_base", &standard_base, py::arg("alpha"));
    m.def("decompose", &decompose, py::arg("s"));
    m.def("compose", &compose, py::arg("d"));
    m.def("scalar_mul", &scalar_mul, py::arg("m"), py::arg("s"));

    py::enum_<DivisionStatus>(m, "DivisionStatus")
        .value("QUOTIENT", DivisionStatus::quotient)
        .value("INDETERMINATE", DivisionStatus::indeterminate)
        .value("NO_SOLUTION", DivisionStatus::no_solution)
        .value("NOT_INVERTIBLE", DivisionStatus::not_invertible)
        .value("NOT_A_SCALAR_DIVISOR", DivisionStatus::not_a_scalar_divisor);

    py::class_<DivisionOutcome>(m, "DivisionOutcome")
        .def_readonly("status", &DivisionOutcome::status)
        .def_readonly("value", &DivisionOutcome::value)
        .def_property_readonly("ok", &DivisionOutcome::ok)
        .def("__repr__", [](const DivisionOutcome& o) {
            std::string text = "DivisionOutcome(" + to_string(o.status);
            if (o.value) text += ", " + o.value->coords_str();
            return text + ")";
        });

    m.def("div_by_scalar", &div_by_scalar, py::arg("s"), py::arg("m"));
    m.def("div_by_zero", &div_by_zero, py::arg("alpha"));
    m.def("divide", &divide, py::arg("s"), py::arg("t"));
    m.def("is_reversible", &is_reversible, py::arg("alpha"));
    m.def("verify_quotient", &verify_quotient, py::arg("s"), py::arg("m"), py::arg("q"));

    py::enum_<Verdict>(m, "Verdict")
        .value("PASS", Verdict::pass)
        .value("FAIL", Verdict::fail)
        .value("WITNESSED", Verdict::witnessed);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("verdict", &CheckResult::verdict)
        .def_readonly("cases", &CheckResult::cases)
        .def_readonly("witness", &CheckResult::witness)
        .def("__repr__", [](const CheckResult& c) {
            return "CheckResult(" + c.name + ", " + to_string(c.verdict) + ", " +
                   std::to_string(c.cases) + ")";
        });

    py::class_<AxiomReport>(m, "AxiomReport")
        .def_readonly("checks", &AxiomReport::checks)
        .def("all_passed", &AxiomReport::all_passed)
        .def("table", &AxiomReport::table)
        .def("json", &AxiomReport::json);

    m.def("run_full_suite", &run_full_suite, py::arg("p"),
          "Exhaustively verify every structural law over GF(p) x GF(p).");

    m.def("evaluate", &eval_text, py::arg("text"), py::arg("field") = "rational",
          "Parse and evaluate one expression, e.g. evaluate('1/0').");
    m.def(
        "render",
        [](const SElement& s, const std::string& format) {
            return render(s, format == "canonical" ? RenderFormat::canonical
                                                   : RenderFormat::coords);
        },
        py::arg("s"), py::arg("format") = "coords");
}
