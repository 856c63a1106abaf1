#pragma once

// RouteReport: one determinant value with route tag and discretization
// metadata; the CLI's unit of output.

#include <map>
#include <string>

#include "chgdet/types.hpp"

namespace chgdet {

enum class Route { quadrature, asymptotic, painleve, toeplitz };

Route route_from_string(const std::string& name);
std::string to_string(Route route);

struct RouteReport {
  Route route = Route::quadrature;
  KernelParams params;
  double s = 0.0;
  double value = 0.0;  // log-determinant
  std::map<std::string, double> meta;
};

/// Evaluates the log-determinant by the requested route.  nodes/tol/t0 pick
/// up route defaults when zero; n_toeplitz defaults to 256.
RouteReport evaluate_route(Route route, const KernelParams& p, double s,
                           int nodes = 0, double tol = 0.0, double t0 = 0.0,
                           int n_toeplitz = 0);

}  // namespace chgdet
