#include "chgdet/report.hpp"

#include "chgdet/asymptotics.hpp"
#include "chgdet/fredholm.hpp"
#include "chgdet/painleve.hpp"
#include "chgdet/toeplitz.hpp"

namespace chgdet {

Route route_from_string(const std::string& name) {
  if (name == "quadrature") return Route::quadrature;
  if (name == "asymptotic") return Route::asymptotic;
  if (name == "painleve") return Route::painleve;
  if (name == "toeplitz") return Route::toeplitz;
  throw DomainError("unknown route '" + name + "'");
}

std::string to_string(Route route) {
  switch (route) {
    case Route::quadrature: return "quadrature";
    case Route::asymptotic: return "asymptotic";
    case Route::painleve: return "painleve";
    case Route::toeplitz: return "toeplitz";
  }
  return "?";
}

RouteReport evaluate_route(Route route, const KernelParams& p, double s,
                           int nodes, double tol, double t0, int n_toeplitz) {
  p.validate();
  RouteReport report;
  report.route = route;
  report.params = p;
  report.s = s;
  switch (route) {
    case Route::quadrature: {
      double use_tol = tol > 0.0 ? tol : 1e-10;
      ConvergedLogDet res = log_det_converged(p, s, p.gamma, use_tol, nodes);
      report.value = res.value;
      report.meta = {{"n_used", double(res.n_used)},
                     {"tol", use_tol},
                     {"est_err", res.est_err}};
      break;
    }
    case Route::asymptotic: {
      AsymDetBreakdown b = log_asym_det(p, s);
      report.value = b.total;
      report.meta = {{"c", b.c},
                     {"term_linear", b.term_linear},
                     {"term_barnes", b.term_barnes},
                     {"term_log", b.term_log},
                     {"term_exp", b.term_exp}};
      break;
    }
    case Route::painleve: {
      double use_tol = tol > 0.0 ? tol : 1e-10;
      double use_t0 = t0 > 0.0 ? t0 : 1e-3;
      LogDetViaH res = log_det_via_h_detailed(p, s, use_t0, use_tol);
      report.value = res.value;
      report.meta = {{"t0", use_t0},
                     {"tol", use_tol},
                     {"imag_residue", res.imag_residue},
                     {"n_steps", double(res.n_steps)}};
      break;
    }
    case Route::toeplitz: {
      int n = n_toeplitz > 0 ? n_toeplitz : 256;
      report.value = scaling_limit_check(p, s, n);
      report.meta = {{"n_toeplitz", double(n)}};
      break;
    }
  }
  return report;
}

}  // namespace chgdet
