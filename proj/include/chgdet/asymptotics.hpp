#pragma once

// Closed-form large-gap asymptotics, counting-statistics constants, and the
// boundary / large-argument reference data for the coupled Painleve V system.

#include "chgdet/types.hpp"

namespace chgdet {

/// c(gamma) = -ln(1-gamma) / (2 pi).
double c_of_gamma(double gamma);

/// Term-by-term breakdown of the large-gap log-determinant asymptotics
///   2 alpha pi c + 2 ln[G(1+ic)G(1-ic)] + 2 c^2 ln(4s) - 4 c s.
struct AsymDetBreakdown {
  double c = 0.0;
  double term_linear = 0.0;  // 2 alpha pi c
  double term_barnes = 0.0;  // 2 ln[G(1+ic)G(1-ic)]
  double term_log = 0.0;     // 2 c^2 ln(4s)
  double term_exp = 0.0;     // -4 c s
  double total = 0.0;
};

AsymDetBreakdown log_asym_det(const KernelParams& p, double s);

/// mu(s) = 2s/pi - alpha, sigma^2(s) = ln s / pi^2, and the variance constant
/// (1 + gammaE + 2 ln 2)/pi^2.
struct CountingRefs {
  double mu = 0.0;
  double sigma2 = 0.0;
  double var_const = 0.0;
};

CountingRefs counting_refs(double alpha, double s);

/// Reference phase-space point assembled from leading asymptotic terms.
struct PVRefPoint {
  double t = 0.0;
  Complex u1, u2, v1, v2;
  Complex H;
};

/// Leading terms of the large-argument behavior, evaluated on the ray
/// tau = -it with arg tau fixed at -pi/2.  Requires t >= 1.
PVRefPoint pv_large_t_ref(const KernelParams& p, double t);

/// Leading terms of the small-argument behavior (v1 = v2 = 1).  Requires
/// 0 < t <= 0.1.
PVRefPoint pv_small_t_ref(const KernelParams& p, double t);

namespace detail {
/// arg tau on the integration ray tau = -it, t > 0.
inline constexpr double kTauArgOnRay = -1.5707963267948966;

/// Re/Im-ready coefficient of the small-|tau| Hamiltonian: H(-it) = -i C t^{2 alpha}.
double pv_small_h_coefficient(const KernelParams& p);
}  // namespace detail

}  // namespace chgdet
