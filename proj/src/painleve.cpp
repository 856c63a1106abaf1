#include "chgdet/painleve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "chgdet/asymptotics.hpp"
#include "chgdet/fredholm.hpp"
#include "chgdet/specfun.hpp"

namespace chgdet {

namespace {

constexpr double kMaxStep = 0.5;  // resolves the e^{+-it/2} rotation
constexpr double kBlowUpLimit = 1e8;

Complex hamiltonian_v(Complex u, Complex v, Complex sigma, double alpha, Complex beta) {
  Complex vm1 = v - 1.0;
  return (u * u * v * vm1 * vm1 - sigma * u * v - alpha * u * (v * v - 1.0) -
          beta * u * vm1 * vm1) /
         sigma;
}

}  // namespace

Complex pv_hamiltonian(const PVState& st, const KernelParams& p) {
  if (!(st.t > 0.0)) throw DomainError("pv_hamiltonian: t must be positive");
  const Complex tau(0.0, -st.t);
  const Complex beta(0.0, p.b);
  Complex h = 0.5 * (hamiltonian_v(st.u1, st.v1, 0.5 * tau, p.alpha, beta) -
                     hamiltonian_v(st.u2, st.v2, -0.5 * tau, p.alpha, beta));
  h += st.u1 * st.u2 * (st.v1 + st.v2) * (st.v1 - 1.0) * (st.v2 - 1.0) / tau;
  return h;
}

PVDeriv pv_rhs(const PVState& st, const KernelParams& p) {
  if (!(st.t > 0.0)) throw DomainError("pv_rhs: t must be positive");
  const Complex tau(0.0, -st.t);
  const Complex beta(0.0, p.b);
  const double alpha = p.alpha;
  const Complex u1 = st.u1, u2 = st.u2, v1 = st.v1, v2 = st.v2;
  const Complex v1m = v1 - 1.0, v2m = v2 - 1.0;

  Complex f_u1 = 0.5 * tau * u1 - u1 * u1 * v1m * (3.0 * v1 - 1.0) -
                 u1 * u2 * v2m * (2.0 * v1 + v2 - 1.0) +
                 2.0 * (alpha + beta) * u1 * v1 - 2.0 * beta * u1;
  Complex f_u2 = -0.5 * tau * u2 - u2 * u2 * v2m * (3.0 * v2 - 1.0) -
                 u1 * u2 * v1m * (v1 + 2.0 * v2 - 1.0) +
                 2.0 * (alpha + beta) * u2 * v2 - 2.0 * beta * u2;
  Complex f_v1 = -0.5 * tau * v1 + 2.0 * u1 * v1 * v1m * v1m +
                 u2 * (v1 + v2) * v1m * v2m - alpha * (v1 * v1 - 1.0) -
                 beta * v1m * v1m;
  Complex f_v2 = 0.5 * tau * v2 + 2.0 * u2 * v2 * v2m * v2m +
                 u1 * (v1 + v2) * v1m * v2m - alpha * (v2 * v2 - 1.0) -
                 beta * v2m * v2m;

  // tau d/dtau = t d/dt on the ray
  return {f_u1 / st.t, f_u2 / st.t, f_v1 / st.t, f_v2 / st.t};
}

PVState pv_init(const KernelParams& p, double t0) {
  p.validate();
  if (!(t0 > 0.0 && t0 <= 0.01)) throw DomainError("pv_init: 0 < t0 <= 0.01 required");
  PVRefPoint ref = pv_small_t_ref(p, t0);
  return {t0, ref.u1, ref.u2, ref.v1, ref.v2};
}

namespace detail {

namespace {
inline double detail_tau_arg() { return chgdet::detail::kTauArgOnRay; }
}  // namespace

PVState pv_init_refined(const KernelParams& p, double t0) {
  PVState st = pv_init(p, t0);
  // First subleading boundary terms, obtained by feeding the leading data back
  // through the differential system:
  //   v_k = 1 -+ tau/(2(2a+1)),
  //   u_k = u_k^lead (1 + delta_k),
  //   delta_k = +- tau (1/2 - (a+beta)/(2a+1)) + tau^{2a+1} (A1-A2)/(2a+1)^2,
  // where A_k are the tau^{2a} coefficients of u_k.  Without the v-correction
  // the Hamiltonian at the starting point is off by the factor (2a+1).
  const Complex tau(0.0, -t0);
  const Complex beta(0.0, p.b);
  const double w = 2.0 * p.alpha + 1.0;
  Complex eps = tau / (2.0 * w);
  st.v1 -= eps;
  st.v2 += eps;
  const Complex tau_2a = std::exp(2.0 * p.alpha *
                                  Complex(std::log(t0), detail_tau_arg()));
  Complex a1 = st.u1 / tau_2a;
  Complex a2 = st.u2 / tau_2a;
  Complex linear = tau * (0.5 - (p.alpha + beta) / w);
  Complex feedback = tau * tau_2a * (a1 - a2) / (w * w);
  st.u1 *= 1.0 + linear + feedback;
  st.u2 *= 1.0 - linear + feedback;
  return st;
}

}  // namespace detail

namespace {

// State layout for the solver: u1, u2, v1, v2, running integral of (-i) H.
using Vec = std::array<Complex, 5>;

Vec rhs_vec(double t, const Vec& y, const KernelParams& p) {
  PVState st{t, y[0], y[1], y[2], y[3]};
  PVDeriv d = pv_rhs(st, p);
  Complex h = pv_hamiltonian(st, p);
  return {d.du1, d.du2, d.dv1, d.dv2, Complex(0.0, -1.0) * h};
}

struct StepResult {
  Vec y;
  double err;  // scaled error estimate, accept when <= 1
};

// Dormand-Prince 5(4) tableau.
StepResult dp45_step(double t, const Vec& y, double h, const KernelParams& p,
                     double rtol, double atol) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                          e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640,
                          e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  auto axpy = [&](std::initializer_list<std::pair<double, const Vec*>> terms) {
    Vec out = y;
    for (const auto& [coef, k] : terms)
      for (int i = 0; i < 5; ++i) out[i] += h * coef * (*k)[i];
    return out;
  };

  Vec k1 = rhs_vec(t, y, p);
  Vec k2 = rhs_vec(t + c2 * h, axpy({{a21, &k1}}), p);
  Vec k3 = rhs_vec(t + c3 * h, axpy({{a31, &k1}, {a32, &k2}}), p);
  Vec k4 = rhs_vec(t + c4 * h, axpy({{a41, &k1}, {a42, &k2}, {a43, &k3}}), p);
  Vec k5 = rhs_vec(t + c5 * h, axpy({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}), p);
  Vec k6 = rhs_vec(t + h, axpy({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}), p);
  Vec y5 = axpy({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
  Vec k7 = rhs_vec(t + h, y5, p);

  double err2 = 0.0;
  for (int i = 0; i < 5; ++i) {
    Complex e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                     e6 * k6[i] + e7 * k7[i]);
    double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
    double r = std::abs(e) / scale;
    err2 += r * r;
  }
  return {y5, std::sqrt(err2 / 5.0)};
}

PVTrajectory integrate_impl(const KernelParams& p, const PVState& init, double t1,
                            double tol, std::span<const double> checkpoints) {
  if (!(init.t > 0.0 && init.t < t1 && t1 <= 200.0))
    throw DomainError("pv_integrate: need 0 < t0 < t1 <= 200");
  if (!(tol >= 1e-12 && tol <= 1e-6))
    throw DomainError("pv_integrate: tol must lie in [1e-12, 1e-6]");

  std::vector<double> stops(checkpoints.begin(), checkpoints.end());
  stops.push_back(t1);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::remove_if(stops.begin(), stops.end(),
                             [&](double v) { return v <= init.t || v > t1; }),
              stops.end());
  stops.erase(std::unique(stops.begin(), stops.end(),
                          [](double a, double b) { return b - a < 1e-12 * b; }),
              stops.end());
  if (stops.empty() || stops.back() != t1) stops.push_back(t1);

  PVTrajectory traj;
  traj.params = p;
  traj.t0 = init.t;
  traj.tol = tol;

  Vec y{init.u1, init.u2, init.v1, init.v2, Complex(0.0, 0.0)};
  double t = init.t;
  auto record = [&](double tt, const Vec& yy) {
    PVState st{tt, yy[0], yy[1], yy[2], yy[3]};
    traj.states.push_back(st);
    traj.hamiltonians.push_back(pv_hamiltonian(st, p));
  };
  record(t, y);

  const double rtol = tol, atol = 1e-4 * tol;
  double h_ctrl = std::min({1e-2, kMaxStep, t1 - t});
  double err_prev = 1e-4;
  size_t next_stop = 0;

  while (next_stop < stops.size()) {
    double target = stops[next_stop];
    bool capped = h_ctrl > target - t;
    double h = capped ? target - t : h_ctrl;
    if (h < 32.0 * std::numeric_limits<double>::epsilon() * t)
      throw NumericalError("pv_integrate: step size underflow");

    StepResult step = dp45_step(t, y, h, p, rtol, atol);
    if (step.err <= 1.0) {
      t += h;
      y = step.y;
      for (const Complex& c : y)
        if (std::abs(c) > kBlowUpLimit)
          throw NumericalError("pv_integrate: solution blow-up");
      record(t, y);
      if (capped || t >= target - 1e-14 * target) {
        t = target;
        traj.states.back().t = target;
        ++next_stop;
      }
      // PI controller (Hairer's beta = 0.08 variant)
      double fac = 0.9 * std::pow(std::max(step.err, 1e-10), -0.7 / 5.0) *
                   std::pow(err_prev, 0.4 / 5.0);
      double h_new = h * std::clamp(fac, 0.2, 5.0);
      h_ctrl = capped ? std::max(h_ctrl, h_new) : h_new;
      err_prev = std::max(step.err, 1e-4);
    } else {
      h_ctrl = h * std::max(0.2, 0.9 * std::pow(step.err, -0.2));
    }
    h_ctrl = std::min(h_ctrl, kMaxStep);
  }
  traj.h_integral = y[4];
  return traj;
}

}  // namespace

PVTrajectory pv_integrate(const KernelParams& p, double t0, double t1, double tol,
                          std::span<const double> checkpoints) {
  p.validate();
  return integrate_impl(p, detail::pv_init_refined(p, t0), t1, tol, checkpoints);
}

LogDetViaH log_det_via_h_detailed(const KernelParams& p, double s, double t0, double tol) {
  p.validate();
  if (!(s > 0.0 && s <= 10.0)) throw DomainError("log_det_via_h: 0 < s <= 10 required");
  if (!(t0 > 0.0 && t0 <= 1e-3)) throw DomainError("log_det_via_h: t0 <= 1e-3 required");
  LogDetViaH out;
  if (p.gamma == 0.0) return out;
  // head: integral of (-i) H over [0, t0] with H = -i C t^{2 alpha}
  const double coeff = detail::pv_small_h_coefficient(p);
  out.head = -coeff * std::pow(t0, 2.0 * p.alpha + 1.0) / (2.0 * p.alpha + 1.0);
  PVTrajectory traj = integrate_impl(p, detail::pv_init_refined(p, t0), 4.0 * s, tol, {});
  Complex total = out.head + traj.h_integral;
  out.value = total.real();
  out.imag_residue = std::abs(total.imag());
  out.n_steps = int(traj.states.size()) - 1;
  if (out.imag_residue > 100.0 * tol)
    throw NumericalError("log_det_via_h: imaginary residue exceeds 100*tol");
  return out;
}

double log_det_via_h(const KernelParams& p, double s, double t0, double tol) {
  return log_det_via_h_detailed(p, s, t0, tol).value;
}

Complex pv_h_oracle_fd(const KernelParams& p, double s, double fd_step, double quad_tol) {
  double up = log_det_converged(p, s + fd_step, p.gamma, quad_tol).value;
  double dn = log_det_converged(p, s - fd_step, p.gamma, quad_tol).value;
  double deriv = (up - dn) / (2.0 * fd_step);
  return Complex(0.0, 0.25) * deriv;  // (i/4) d/ds ln det = H(-4is)
}

double pv_identity_residual(const PVState& state, const KernelParams& p, double h) {
  // d(tau H)/dtau = i d(tau H)/dt on the ray; neighbors from two tiny RK4 hops
  auto rk4_hop = [&](PVState st, double dt) {
    const int nsub = 4;
    double hh = dt / nsub;
    for (int i = 0; i < nsub; ++i) {
      auto f = [&](const PVState& q) { return pv_rhs(q, p); };
      PVDeriv k1 = f(st);
      PVState s2{st.t + 0.5 * hh, st.u1 + 0.5 * hh * k1.du1, st.u2 + 0.5 * hh * k1.du2,
                 st.v1 + 0.5 * hh * k1.dv1, st.v2 + 0.5 * hh * k1.dv2};
      PVDeriv k2 = f(s2);
      PVState s3{st.t + 0.5 * hh, st.u1 + 0.5 * hh * k2.du1, st.u2 + 0.5 * hh * k2.du2,
                 st.v1 + 0.5 * hh * k2.dv1, st.v2 + 0.5 * hh * k2.dv2};
      PVDeriv k3 = f(s3);
      PVState s4{st.t + hh, st.u1 + hh * k3.du1, st.u2 + hh * k3.du2,
                 st.v1 + hh * k3.dv1, st.v2 + hh * k3.dv2};
      PVDeriv k4 = f(s4);
      st = PVState{st.t + hh,
                   st.u1 + hh / 6.0 * (k1.du1 + 2.0 * k2.du1 + 2.0 * k3.du1 + k4.du1),
                   st.u2 + hh / 6.0 * (k1.du2 + 2.0 * k2.du2 + 2.0 * k3.du2 + k4.du2),
                   st.v1 + hh / 6.0 * (k1.dv1 + 2.0 * k2.dv1 + 2.0 * k3.dv1 + k4.dv1),
                   st.v2 + hh / 6.0 * (k1.dv2 + 2.0 * k2.dv2 + 2.0 * k3.dv2 + k4.dv2)};
    }
    return st;
  };
  PVState fwd = rk4_hop(state, h);
  PVState bwd = rk4_hop(state, -h);
  auto tau_h = [&](const PVState& st) {
    return Complex(0.0, -st.t) * pv_hamiltonian(st, p);
  };
  Complex d_tau_h = Complex(0.0, 1.0) * (tau_h(fwd) - tau_h(bwd)) / (2.0 * h);
  Complex target = -0.5 * (state.u1 * state.v1 - state.u2 * state.v2);
  return std::abs(d_tau_h - target);
}

void write_trajectory_csv(const PVTrajectory& traj, std::ostream& out) {
  out << "t,u1_re,u1_im,u2_re,u2_im,v1_re,v1_im,v2_re,v2_im,H_re,H_im\n";
  char buf[64];
  auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.17g%c", v, sep);
    out << buf;
  };
  for (size_t i = 0; i < traj.states.size(); ++i) {
    const PVState& st = traj.states[i];
    const Complex& h = traj.hamiltonians[i];
    put(st.t, ',');
    put(st.u1.real(), ','); put(st.u1.imag(), ',');
    put(st.u2.real(), ','); put(st.u2.imag(), ',');
    put(st.v1.real(), ','); put(st.v1.imag(), ',');
    put(st.v2.real(), ','); put(st.v2.imag(), ',');
    put(h.real(), ','); put(h.imag(), '\n');
  }
}

}  // namespace chgdet
