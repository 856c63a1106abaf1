#include "chgdet/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "chgdet/specfun.hpp"

namespace chgdet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace

double c_of_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("c_of_gamma: gamma must lie in [0, 1)");
  return -std::log1p(-gamma) / (2.0 * kPi);
}

AsymDetBreakdown log_asym_det(const KernelParams& p, double s) {
  p.validate();
  if (!(s > 0.0)) throw DomainError("log_asym_det: s must be positive");
  AsymDetBreakdown out;
  out.c = c_of_gamma(p.gamma);
  if (out.c == 0.0) return out;  // gamma = 0: every term vanishes
  out.term_linear = 2.0 * p.alpha * kPi * out.c;
  out.term_barnes = 2.0 * barnes_g_log_pair(out.c);
  out.term_log = 2.0 * out.c * out.c * std::log(4.0 * s);
  out.term_exp = -4.0 * out.c * s;
  out.total = out.term_linear + out.term_barnes + out.term_log + out.term_exp;
  return out;
}

CountingRefs counting_refs(double alpha, double s) {
  if (!(s > 1.0)) throw DomainError("counting_refs: s must exceed 1");
  CountingRefs refs;
  refs.mu = 2.0 * s / kPi - alpha;
  refs.sigma2 = std::log(s) / (kPi * kPi);
  refs.var_const = (1.0 + kEulerGamma + 2.0 * std::numbers::ln2) / (kPi * kPi);
  return refs;
}

namespace detail {

double pv_small_h_coefficient(const KernelParams& p) {
  // gamma |Gamma(1+alpha+ib)|^2 cosh(pi b) / (pi 2^{2a+1} (2a+1) Gamma(1+2a)^2)
  double lg_pair = 2.0 * log_gamma(Complex(1.0 + p.alpha, p.b)).real();
  double lg_den = 2.0 * log_gamma(Complex(1.0 + 2.0 * p.alpha, 0.0)).real();
  return p.gamma * std::exp(lg_pair - lg_den) * std::cosh(kPi * p.b) /
         (kPi * std::pow(2.0, 2.0 * p.alpha + 1.0) * (2.0 * p.alpha + 1.0));
}

}  // namespace detail

PVRefPoint pv_large_t_ref(const KernelParams& p, double t) {
  p.validate();
  if (!(t >= 1.0)) throw DomainError("pv_large_t_ref: t >= 1 required");
  PVRefPoint ref;
  ref.t = t;
  const double c = c_of_gamma(p.gamma);
  const Complex tau(0.0, -t);
  if (c == 0.0) {
    // u-prefactors carry a factor c; v's keep their unimodular rotation
    ref.u1 = ref.u2 = 0.0;
  }
  const Complex beta(0.0, p.b);
  const Complex ic(0.0, c);
  const Complex ln_tau(std::log(t), detail::kTauArgOnRay);

  // G1 = Gamma-ratio * 2^{2 beta} e^{i pi (alpha-beta)} e^{-pi c};  u1 = ic G1
  // e^{tau/2} tau^{2(ic-beta)} and v1 is its exact reciprocal counterpart, so
  // the leading product u1 v1 = ic holds to rounding.
  Complex lg1 = log_gamma(1.0 + p.alpha + beta) + log_gamma(1.0 - ic) -
                log_gamma(1.0 + p.alpha - beta) - log_gamma(1.0 + ic) +
                2.0 * beta * std::numbers::ln2 + Complex(0.0, kPi) * (p.alpha - beta) -
                kPi * c;
  Complex g1 = std::exp(lg1);
  Complex osc1 = std::exp(0.5 * tau + 2.0 * (ic - beta) * ln_tau);
  if (c != 0.0) ref.u1 = ic * g1 * osc1;
  ref.v1 = 1.0 / (g1 * osc1);

  Complex lg2 = log_gamma(1.0 + p.alpha + beta) + log_gamma(1.0 + ic) -
                log_gamma(1.0 + p.alpha - beta) - log_gamma(1.0 - ic) +
                2.0 * beta * std::numbers::ln2 - Complex(0.0, kPi) * (p.alpha + beta) +
                kPi * c;
  Complex g2 = std::exp(lg2);
  Complex osc2 = std::exp(-0.5 * tau - 2.0 * (ic + beta) * ln_tau);
  if (c != 0.0) ref.u2 = -ic * g2 * osc2;
  ref.v2 = 1.0 / (g2 * osc2);

  ref.H = -ic + 2.0 * c * c / tau;
  return ref;
}

PVRefPoint pv_small_t_ref(const KernelParams& p, double t) {
  p.validate();
  if (!(t > 0.0 && t <= 0.1)) throw DomainError("pv_small_t_ref: 0 < t <= 0.1 required");
  PVRefPoint ref;
  ref.t = t;
  ref.v1 = ref.v2 = 1.0;
  // u1 = -gamma |Gamma(1+alpha+ib)|^2 e^{pi b} |tau|^{2 alpha} / (i pi 2^{2a+1} Gamma(1+2a)^2)
  double lg_pair = 2.0 * log_gamma(Complex(1.0 + p.alpha, p.b)).real();
  double lg_den = 2.0 * log_gamma(Complex(1.0 + 2.0 * p.alpha, 0.0)).real();
  double amp = p.gamma * std::exp(lg_pair - lg_den) /
               (kPi * std::pow(2.0, 2.0 * p.alpha + 1.0)) *
               std::pow(t, 2.0 * p.alpha);
  ref.u1 = Complex(0.0, amp * std::exp(kPi * p.b));
  ref.u2 = Complex(0.0, -amp * std::exp(-kPi * p.b));
  ref.H = Complex(0.0, -detail::pv_small_h_coefficient(p) * std::pow(t, 2.0 * p.alpha));
  return ref;
}

}  // namespace chgdet
