#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chgdet/asymptotics.hpp"
#include "chgdet/fredholm.hpp"
#include "chgdet/kernel.hpp"
#include "chgdet/painleve.hpp"
#include "chgdet/specfun.hpp"
#include "chgdet/stats.hpp"
#include "chgdet/toeplitz.hpp"

namespace py = pybind11;
using namespace chgdet;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deformed Fredholm determinant of the confluent hypergeometric kernel";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<KernelParams>(m, "KernelParams")
      .def(py::init<double, double, double>(), py::arg("alpha") = 0.0,
           py::arg("b") = 0.0, py::arg("gamma") = 0.0)
      .def_readwrite("alpha", &KernelParams::alpha)
      .def_readwrite("b", &KernelParams::b)
      .def_readwrite("gamma", &KernelParams::gamma)
      .def("__repr__", [](const KernelParams& p) {
        return "KernelParams(alpha=" + std::to_string(p.alpha) +
               ", b=" + std::to_string(p.b) + ", gamma=" + std::to_string(p.gamma) + ")";
      });

  // special functions
  m.def("log_gamma", &log_gamma, py::arg("z"));
  m.def("barnes_g_log_pair", &barnes_g_log_pair, py::arg("c"));
  m.def("kummer_m", &kummer_m, py::arg("a"), py::arg("b"), py::arg("z"));
  m.def("kummer_m_deriv", &kummer_m_deriv, py::arg("a"), py::arg("b"), py::arg("z"));
  m.def("bessel_j01", &bessel_j01, py::arg("k"), py::arg("x"));

  // kernel
  m.def("chg_kernel", &chg_kernel, py::arg("params"), py::arg("x"), py::arg("y"));
  m.def("chg_kernel_diag", &chg_kernel_diag, py::arg("params"), py::arg("x"));
  m.def("sine_kernel", &sine_kernel, py::arg("x"), py::arg("y"));

  // quadrature route
  m.def(
      "log_det_quadrature",
      [](const KernelParams& p, double s, double tol, int n0) {
        ConvergedLogDet r = log_det_converged(p, s, p.gamma, tol, n0);
        return py::make_tuple(r.value, r.n_used, r.est_err);
      },
      py::arg("params"), py::arg("s"), py::arg("tol") = 1e-10, py::arg("n0") = 0,
      "Converged Nystrom log-determinant; returns (value, n_used, est_err)");
  m.def(
      "operator_eigenvalues",
      [](const KernelParams& p, double s, int n) {
        return eigenvalues(build_operator(p, s, n));
      },
      py::arg("params"), py::arg("s"), py::arg("n"));

  // asymptotic route
  m.def("c_of_gamma", &c_of_gamma, py::arg("gamma"));
  py::class_<AsymDetBreakdown>(m, "AsymDetBreakdown")
      .def_readonly("c", &AsymDetBreakdown::c)
      .def_readonly("term_linear", &AsymDetBreakdown::term_linear)
      .def_readonly("term_barnes", &AsymDetBreakdown::term_barnes)
      .def_readonly("term_log", &AsymDetBreakdown::term_log)
      .def_readonly("term_exp", &AsymDetBreakdown::term_exp)
      .def_readonly("total", &AsymDetBreakdown::total);
  m.def("log_asym_det", &log_asym_det, py::arg("params"), py::arg("s"));

  // Painleve route
  m.def("log_det_painleve", &log_det_via_h, py::arg("params"), py::arg("s"),
        py::arg("t0") = 1e-3, py::arg("tol") = 1e-10);

  // Toeplitz route
  m.def("scaling_limit_check", &scaling_limit_check, py::arg("params"),
        py::arg("s"), py::arg("n"));

  // counting statistics
  py::class_<CountingSummary>(m, "CountingSummary")
      .def_readonly("s", &CountingSummary::s)
      .def_readonly("e_n", &CountingSummary::e_n)
      .def_readonly("var_n", &CountingSummary::var_n)
      .def_readonly("pmf", &CountingSummary::pmf)
      .def_readonly("ks_normal", &CountingSummary::ks_normal)
      .def_readonly("n_eigs_used", &CountingSummary::n_eigs_used);
  m.def("counting_summary", &counting_summary, py::arg("params"), py::arg("s"),
        py::arg("n_quad") = 0);
  m.def(
      "genfunc_check",
      [](const KernelParams& p, double s, double nu, int n_quad) {
        GenfuncCheck g = genfunc_check(p, s, nu, n_quad);
        return py::make_tuple(g.lhs, g.rhs);
      },
      py::arg("params"), py::arg("s"), py::arg("nu"), py::arg("n_quad") = 0);

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
