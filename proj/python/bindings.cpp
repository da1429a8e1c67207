#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gtrig/acceptance.hpp"
#include "gtrig/cyclotomic.hpp"
#include "gtrig/errors.hpp"
#include "gtrig/series.hpp"

namespace py = pybind11;
using namespace gtrig;

namespace {

std::vector<ComplexVector> rows(const Matrix& m) {
    std::vector<ComplexVector> out;
    for (std::size_t r = 0; r < m.dim(); ++r) out.push_back(m.row(r));
    return out;
}

Polynomial to_polynomial(const py::object& p) {
    if (py::isinstance<py::str>(p)) return parse_polynomial(p.cast<std::string>());
    if (py::isinstance<Polynomial>(p)) return p.cast<Polynomial>();
    return Polynomial(p.cast<ComplexVector>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generalized trigonometric functions and closed-form rational series";

    auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    (void)input_error;

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<ComplexVector>(), py::arg("coeffs"))
        .def_static("parse", &parse_polynomial, py::arg("text"))
        .def_static("from_coefficients", &parse_coefficients, py::arg("text"))
        .def_property_readonly("coeffs", &Polynomial::coeffs)
        .def_property_readonly("degree", &Polynomial::degree)
        .def("__call__", &Polynomial::operator(), py::arg("x"))
        .def("__str__", [](const Polynomial& p) { return to_string(p); })
        .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + to_string(p) + "')"; })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; });

    m.def("find_roots", [](const py::object& p, double tol) { return find_roots(to_polynomial(p), tol).roots; },
          py::arg("p"), py::arg("tol") = 1e-13);

    py::class_<GenTrigSystem>(m, "GenTrigSystem")
        .def(py::init([](const py::object& p, double tol) { return GenTrigSystem(to_polynomial(p), tol); }),
             py::arg("p"), py::arg("tol") = 1e-13)
        .def_property_readonly("degree", &GenTrigSystem::degree)
        .def_property_readonly("roots", [](const GenTrigSystem& s) { return s.roots().roots; })
        .def_property_readonly("tuples", [](const GenTrigSystem& s) { return rows(s.tuples().values); })
        .def_property_readonly("derivative_matrix", [](const GenTrigSystem& s) { return rows(s.derivative_matrix()); })
        .def("S", &eval_S, py::arg("l"), py::arg("x"))
        .def("S_all", &eval_S_all, py::arg("x"))
        .def("R", &eval_R, py::arg("l"), py::arg("x"))
        .def("taylor", &taylor_coeffs, py::arg("l"), py::arg("order"))
        .def("fourier_coefficient", &fourier_coefficient, py::arg("l"), py::arg("n"));

    py::class_<IdentityCertificate>(m, "IdentityCertificate")
        .def_readonly("left_vector", &IdentityCertificate::left_vector)
        .def_readonly("eigenvalue", &IdentityCertificate::lambda)
        .def_readonly("det_ref", &IdentityCertificate::det_ref)
        .def_readonly("eigen_residual", &IdentityCertificate::eigen_residual);
    m.def("identity_certificate", &identity_certificate, py::arg("system"));
    m.def("det_M", &eval_det_M, py::arg("certificate"), py::arg("system"), py::arg("x"));

    py::class_<CyclotomicSystem>(m, "CyclotomicSystem")
        .def(py::init<int>(), py::arg("m"))
        .def_property_readonly("m", &CyclotomicSystem::m)
        .def_property_readonly("zeta", &CyclotomicSystem::zeta)
        .def_property_readonly("eta", &CyclotomicSystem::eta)
        .def("S", &eval_S_cyclo, py::arg("l"), py::arg("x"))
        .def("S_all", &eval_S_cyclo_all, py::arg("x"))
        .def("taylor", &taylor_eval_cyclo, py::arg("l"), py::arg("x"), py::arg("terms"))
        .def("det_M", &cyclotomic_det, py::arg("x"))
        .def("addition", [](const CyclotomicSystem& s, int l, Complex x1, Complex x2) {
            return apply_addition(s, addition_rule(s.m(), l), x1, x2);
        }, py::arg("l"), py::arg("x1"), py::arg("x2"));

    m.def("addition_rule", [](int mm, int l) {
        const AdditionRule r = addition_rule(mm, l);
        return py::make_tuple(r.signs, r.partner);
    }, py::arg("m"), py::arg("l"));

    m.def("factorial_identity", [](int n) {
        const FactorialIdentity f = factorial_identity_check(n);
        py::dict out;
        out["sum_a"] = f.sum_a.str();
        out["sum_b"] = f.sum_b.str();
        out["sum_b_any_order"] = f.sum_b_any_order.str();
        out["holds"] = f.holds;
        return out;
    }, py::arg("n"));

    m.def("matrix_A", [](int mm) {
        const MatrixAResult r = matrix_A(CyclotomicSystem(mm));
        return py::make_tuple(rows(r.a), r.det, r.det_via_factorization);
    }, py::arg("m"));

    m.def("associated_matrix", [](const py::object& p, bool descending) {
        const AssociatedMatrix am = associated_matrix(GenTrigSystem(to_polynomial(p)));
        return rows(descending ? AssociatedMatrix::descending(am.c) : am.c);
    }, py::arg("p"), py::arg("descending") = false);

    m.def("evaluate_sums", [](const py::object& p, long oracle_terms, bool run_oracle) {
        SeriesOptions opt;
        opt.oracle_terms = oracle_terms;
        opt.run_oracle = run_oracle;
        const SeriesResult r = evaluate_sums(to_polynomial(p), opt);
        py::dict out;
        out["A"] = r.a;
        out["B"] = r.b;
        out["condition_estimate"] = r.condition_estimate;
        out["solve_residual"] = r.solve_residual;
        if (run_oracle) {
            std::vector<Complex> oa, ob;
            for (const auto& e : r.oracle_a) oa.push_back(e.value);
            for (const auto& e : r.oracle_b) ob.push_back(e.value);
            out["oracle_A"] = oa;
            out["oracle_B"] = ob;
        }
        return out;
    }, py::arg("p"), py::arg("oracle_terms") = kDefaultOracleTerms, py::arg("run_oracle") = true);

    m.def("brute_force_sum", [](const py::object& p, int k, bool alternating, long n) {
        const OracleEstimate e = brute_force_sum(to_polynomial(p), k, alternating, n);
        return py::make_tuple(e.value, e.error_bar);
    }, py::arg("p"), py::arg("k"), py::arg("alternating") = false, py::arg("n_terms") = kDefaultOracleTerms);

    m.def("run_criterion", [](int id, std::uint64_t seed, double sum_tol) {
        acceptance::Config config;
        config.seed = seed;
        config.sum_tol = sum_tol;
        const auto r = acceptance::run_criterion(id, config);
        py::list checks;
        for (const auto& c : r.checks) checks.append(py::make_tuple(c.name, c.measured, c.threshold, c.passed));
        py::dict out;
        out["id"] = r.id;
        out["title"] = r.title;
        out["passed"] = r.passed();
        out["checks"] = checks;
        out["error"] = r.error;
        return out;
    }, py::arg("id"), py::arg("seed") = acceptance::kDefaultSeed, py::arg("sum_tol") = 1e-6);
}
