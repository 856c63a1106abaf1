#pragma once

// Coupled Painleve V system on the ray tau = -it: Hamiltonian, vector field,
// small-argument boundary data, adaptive integration, and the Hamiltonian
// integral representation of the log-determinant.

#include <span>
#include <vector>

#include "chgdet/types.hpp"

namespace chgdet {

/// Phase-space point at |tau| = t along the ray tau = -it.
struct PVState {
  double t = 0.0;
  Complex u1, u2, v1, v2;
};

/// H(tau) = [H_V(u1,v1,tau/2) - H_V(u2,v2,-tau/2)]/2
///          + u1 u2 (v1+v2)(v1-1)(v2-1)/tau,  with
/// H_V(u,v,s) = [u^2 v(v-1)^2 - s u v - alpha u(v^2-1) - beta u(v-1)^2]/s.
Complex pv_hamiltonian(const PVState& state, const KernelParams& p);

struct PVDeriv {
  Complex du1, du2, dv1, dv2;  // per unit t
};

/// Vector field in the real variable t (tau d/dtau = t d/dt on the ray).
PVDeriv pv_rhs(const PVState& state, const KernelParams& p);

/// Boundary data from the small-argument expansion, leading terms only:
/// v1 = v2 = 1, u's proportional to t^{2 alpha}.  Requires 0 < t0 <= 0.01.
PVState pv_init(const KernelParams& p, double t0);

struct PVTrajectory {
  std::vector<PVState> states;       // strictly increasing t
  std::vector<Complex> hamiltonians; // H at each state
  KernelParams params;
  double t0 = 0.0;
  double tol = 0.0;
  Complex h_integral;  // int_{t0}^{t1} (-i) H(-it) dt accumulated by the solver
};

/// Adaptive embedded Runge-Kutta 5(4) with PI step control at relative
/// tolerance tol; lands exactly on every requested checkpoint.  Steps are
/// capped at 0.5 so the e^{+-it/2} rotation is never aliased.
PVTrajectory pv_integrate(const KernelParams& p, double t0, double t1, double tol,
                          std::span<const double> checkpoints = {});

struct LogDetViaH {
  double value = 0.0;         // Re of head + tail integral
  double imag_residue = 0.0;  // |Im| of the same sum, reported
  double head = 0.0;          // analytic [0, t0] contribution
  int n_steps = 0;
};

/// ln det(I - gamma K_s) = Re int_0^{4s} (-i) H(-it) dt.  The [0, t0] head is
/// integrated in closed form from the small-argument Hamiltonian; the tail
/// rides along the trajectory as an extra quadrature component.
LogDetViaH log_det_via_h_detailed(const KernelParams& p, double s, double t0, double tol);
double log_det_via_h(const KernelParams& p, double s, double t0, double tol);

/// Finite-difference oracle for H(-4is): i/4 d/ds of the quadrature-route
/// log-determinant, central differences with the given step.
Complex pv_h_oracle_fd(const KernelParams& p, double s, double fd_step, double quad_tol);

/// Residual of the identity d(tau H)/dtau + (u1 v1 - u2 v2)/2 = 0 at the given
/// state, with the tau-derivative taken by central differences along locally
/// re-integrated neighbor states (step h in t).
double pv_identity_residual(const PVState& state, const KernelParams& p, double h = 1e-4);

/// Writes "t,u1_re,u1_im,...,H_re,H_im" rows; consumed by the CLI.
void write_trajectory_csv(const PVTrajectory& traj, std::ostream& out);

namespace detail {
/// pv_init plus the first subleading v-correction v_k = 1 -+ tau/(2(2a+1)),
/// used to start the determinant route.
PVState pv_init_refined(const KernelParams& p, double t0);
}  // namespace detail

}  // namespace chgdet
