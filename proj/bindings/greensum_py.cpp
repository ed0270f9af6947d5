#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "greensum/boxlab.hpp"
#include "greensum/checks.hpp"
#include "greensum/eigensolve.hpp"
#include "greensum/powerlaw.hpp"
#include "greensum/quadrature.hpp"
#include "greensum/reflectionless.hpp"
#include "greensum/specfun.hpp"
#include "greensum/spectral.hpp"
#include "greensum/susy.hpp"

namespace py = pybind11;
using namespace greensum;

namespace {

boxlab::BoundaryCase to_case(int c) {
    if (c < 1 || c > 4) throw std::invalid_argument("box case must be 1..4");
    return static_cast<boxlab::BoundaryCase>(c);
}

eigensolve::Parity to_parity(const std::string& p) {
    if (p == "even") return eigensolve::Parity::even;
    if (p == "odd") return eigensolve::Parity::odd;
    throw std::invalid_argument("parity must be 'even' or 'odd'");
}

py::dict check_to_dict(const checks::CheckResult& r) {
    py::dict d;
    d["id"] = r.id;
    d["module"] = r.module;
    d["description"] = r.description;
    d["provenance"] = r.provenance;
    d["computed"] = r.computed;
    d["reference"] = r.reference;
    d["abs_err"] = r.abs_err;
    d["rel_err"] = r.rel_err;
    d["tolerance"] = r.tolerance;
    d["pass"] = r.pass;
    d["wall_ms"] = r.wall_ms;
    d["note"] = r.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_greensum, m) {
    m.doc() = "Green's functions, eigenvalue sum rules and SUSY partner potentials "
              "for 1-D Schrodinger operators";

    // ---- special functions ----
    m.def("gamma", &specfun::gamma, py::arg("x"));
    m.def("bessel_i", &specfun::bessel_i, py::arg("nu"), py::arg("x"));
    m.def("bessel_k", &specfun::bessel_k, py::arg("nu"), py::arg("x"));
    m.def("bessel_i_scaled", &specfun::bessel_i_scaled, py::arg("nu"), py::arg("x"));
    m.def("bessel_k_scaled", &specfun::bessel_k_scaled, py::arg("nu"), py::arg("x"));
    m.def("spherical_j1", &specfun::spherical_j1, py::arg("x"));
    m.def("dawson", &specfun::dawson, py::arg("x"));
    m.def("erfc", &specfun::erfc, py::arg("x"));
    m.def("erfcx", &specfun::erfcx, py::arg("x"));

    // ---- quadrature ----
    m.def(
        "integrate",
        [](const std::function<double(double)>& f, double a, double b, double tol,
           const std::vector<double>& singularities) {
            const auto r =
                quadrature::integrate_finite(quadrature::Integrand(f, singularities), a, b, tol);
            return py::make_tuple(r.value, r.error_estimate, r.evaluations);
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10,
        py::arg("singularities") = std::vector<double>{},
        "adaptive Gauss-Kronrod; returns (value, error_estimate, evaluations)");
    m.def(
        "integrate_to_infinity",
        [](const std::function<double(double)>& f, double a, double tol) {
            const auto r = quadrature::integrate_semi_infinite(quadrature::Integrand(f), a, tol);
            return py::make_tuple(r.value, r.error_estimate, r.evaluations);
        },
        py::arg("f"), py::arg("a") = 0.0, py::arg("tol") = 1e-10);
    m.def("separable_double_integral", &quadrature::separable_double_integral, py::arg("f"),
          py::arg("g"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10);

    // ---- box laboratory ----
    m.def(
        "box_gamma", [](int c, int j) { return boxlab::gamma_j(to_case(c), j); },
        py::arg("box_case"), py::arg("j"));
    m.def(
        "box_eigenfunction",
        [](int c, int j, double x) { return boxlab::eigenfunction(to_case(c), j, x); },
        py::arg("box_case"), py::arg("j"), py::arg("x"));
    m.def(
        "box_g",
        [](int c, int k, double x, double xp) { return boxlab::closed_form_g(to_case(c), k, x, xp); },
        py::arg("box_case"), py::arg("k"), py::arg("x"), py::arg("xp"),
        "closed-form g_k for k in {-1, -2, -4}");
    m.def(
        "box_greens",
        [](int c, double x, double xp) { return boxlab::greens(to_case(c), x, xp); },
        py::arg("box_case"), py::arg("x"), py::arg("xp"));
    m.def(
        "box_alternating_f1",
        [](int c, double x, double xp) { return boxlab::alternating_f1(to_case(c), x, xp); },
        py::arg("box_case"), py::arg("x"), py::arg("xp"));
    m.def(
        "box_series",
        [](int c, int k, int terms, double x, double xp, bool alternating) {
            auto spec = boxlab::make_spectrum(to_case(c), terms);
            spectral::KernelSeries s(spec, k,
                                     alternating ? spectral::SignMode::alternating
                                                 : spectral::SignMode::uniform,
                                     terms);
            return spectral::g_k_eval(s, x, xp);
        },
        py::arg("box_case"), py::arg("k"), py::arg("terms"), py::arg("x"), py::arg("xp"),
        py::arg("alternating") = false, "truncated eigenfunction series");
    m.def(
        "box_identity_residual",
        [](const std::string& id, int grid, double tol) {
            return boxlab::identity_check(id, boxlab::interior_grid(grid), tol).max_residual;
        },
        py::arg("id"), py::arg("grid") = 5, py::arg("tol") = 1e-6);

    // ---- power-law potentials ----
    m.def("sum_even", &powerlaw::sum_even, py::arg("nu"));
    m.def("sum_odd", &powerlaw::sum_odd, py::arg("nu"));
    m.def("sum_alternating", &powerlaw::sum_alternating, py::arg("nu"));
    m.def(
        "powerlaw_greens_even",
        [](double alpha, double x, double xp) {
            return powerlaw::greens_even(powerlaw::PowerLawPotential(alpha), x, xp);
        },
        py::arg("alpha"), py::arg("x"), py::arg("xp"));
    m.def(
        "powerlaw_greens_odd",
        [](double alpha, double x, double xp) {
            return powerlaw::greens_odd(powerlaw::PowerLawPotential(alpha), x, xp);
        },
        py::arg("alpha"), py::arg("x"), py::arg("xp"));
    m.def(
        "partner_potential",
        [](double alpha, double x) {
            return powerlaw::partner_potential(powerlaw::PowerLawPotential(alpha), x);
        },
        py::arg("alpha"), py::arg("x"));
    m.def(
        "partner_ground_state",
        [](double alpha, double x) {
            return powerlaw::partner_ground_state(powerlaw::PowerLawPotential(alpha), x);
        },
        py::arg("alpha"), py::arg("x"));
    m.def(
        "wkb_eigenvalue",
        [](double alpha, int n) {
            return powerlaw::wkb_eigenvalue(powerlaw::PowerLawPotential(alpha), n);
        },
        py::arg("alpha"), py::arg("n"));
    m.def(
        "bessel_identity",
        [](double nu, int sign) {
            const auto r = powerlaw::bessel_identity(nu, sign);
            py::dict d;
            d["nu"] = r.nu;
            d["sign"] = r.sign;
            d["lhs_quadrature"] = r.lhs_quadrature;
            d["rhs_gamma"] = r.rhs_gamma;
            d["nested_double"] = r.nested_double;
            d["residual"] = r.residual;
            d["nested_residual"] = r.nested_residual;
            return d;
        },
        py::arg("nu"), py::arg("sign") = -1);
    m.def(
        "figure_data",
        [](int n, double lo, double hi, int samples) {
            py::list rows;
            for (const auto& r : powerlaw::figure_data(n, lo, hi, samples))
                rows.append(py::make_tuple(r.x, r.potential, r.partner, r.ground_state));
            return rows;
        },
        py::arg("n"), py::arg("lo") = -2.0, py::arg("hi") = 2.0, py::arg("samples") = 801,
        "rows of (x, U, U_partner, groundstate)");
    m.def(
        "powerlaw_eigenvalue_sums",
        [](double alpha, int states_per_parity) {
            const auto r = powerlaw::eigenvalue_sums(alpha, states_per_parity);
            py::dict d;
            d["even_sum"] = r.even_sum;
            d["odd_sum"] = r.odd_sum;
            d["alternating_sum"] = r.alternating_sum;
            d["tail_even"] = r.tail_even;
            d["tail_odd"] = r.tail_odd;
            d["states_per_parity"] = r.states_per_parity;
            return d;
        },
        py::arg("alpha"), py::arg("states_per_parity") = 40);

    // ---- eigensolver ----
    m.def(
        "solve_spectrum",
        [](const std::function<double(double)>& U, const std::string& parity, double x_max,
           int count, double h) {
            auto states =
                eigensolve::solve_spectrum(eigensolve::half_line(U, to_parity(parity), x_max, h),
                                           count);
            py::list out;
            for (const auto& s : states) out.append(py::make_tuple(s.energy, s.nodes));
            return out;
        },
        py::arg("U"), py::arg("parity"), py::arg("x_max"), py::arg("count"),
        py::arg("h") = 1e-3, "half-line shooting; returns [(energy, nodes)]");

    // ---- susy examples ----
    m.def("oscillator_suite", [] {
        const auto r = susy::oscillator_suite();
        py::dict d;
        d["ss1"] = r.ss1;
        d["ss2"] = r.ss2;
        d["ss3"] = r.ss3;
        d["max_residual"] = r.max_residual;
        return d;
    });

    // ---- reflectionless ----
    m.def("soliton_potential", &reflectionless::soliton_potential, py::arg("alpha"),
          py::arg("x"));
    m.def("lax_diag", &reflectionless::lax_diag, py::arg("k"), py::arg("alpha"), py::arg("x"));
    m.def(
        "lax_integral",
        [](int k, double alpha) {
            const auto r = reflectionless::lax_integral(k, alpha);
            return py::make_tuple(r.value, r.tail_bound);
        },
        py::arg("k"), py::arg("alpha"));

    // ---- verification ----
    m.def("check_ids", &checks::all_ids);
    m.def(
        "run_check", [](const std::string& id) { return check_to_dict(checks::run(id)); },
        py::arg("id"));
    m.def(
        "run_checks",
        [](const std::string& module, int jobs) {
            py::list out;
            for (const auto& r : checks::run_selected({}, jobs, module))
                out.append(check_to_dict(r));
            return out;
        },
        py::arg("module") = "", py::arg("jobs") = 1);
}
