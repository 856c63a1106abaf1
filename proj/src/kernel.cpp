#include "chgdet/kernel.hpp"

#include <cmath>
#include <numbers>

#include "chgdet/specfun.hpp"

namespace chgdet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNearDiagonal = 1e-4;

}  // namespace

Complex amplitude(const KernelParams& p, double x) {
  if (x == 0.0) throw DomainError("amplitude: x = 0 is outside the domain");
  // chi_beta^{1/2} is real for beta = i b: e^{-pi b/2} (x<0), e^{pi b/2} (x>0)
  double chi_half = std::exp(x > 0.0 ? kPi * p.b / 2.0 : -kPi * p.b / 2.0);
  Complex a(1.0 + p.alpha, p.b);
  Complex bb(1.0 + 2.0 * p.alpha, 0.0);
  Complex phi = kummer_m(a, bb, Complex(0.0, 2.0 * x));
  return chi_half * std::pow(std::abs(2.0 * x), p.alpha) *
         std::exp(Complex(0.0, -x)) * phi;
}

double kernel_prefactor(const KernelParams& p) {
  // Gamma(1+alpha+-ib) are conjugates, so the product is |Gamma|^2
  double lg_pair = 2.0 * log_gamma(Complex(1.0 + p.alpha, p.b)).real();
  double lg_den = 2.0 * log_gamma(Complex(1.0 + 2.0 * p.alpha, 0.0)).real();
  return std::exp(lg_pair - lg_den);
}

double chg_kernel(const KernelParams& p, double x, double y) {
  if (x == y) throw DomainError("chg_kernel: diagonal requires chg_kernel_diag");
  if (x == 0.0 || y == 0.0) throw DomainError("chg_kernel: x*y = 0 is outside the domain");
  if (std::abs(x - y) < kNearDiagonal && x * y > 0.0) {
    // ratio form loses half the digits as y -> x; midpoint diagonal value is
    // O((x-y)^2) accurate because odd terms cancel around the midpoint
    return chg_kernel_diag(p, 0.5 * (x + y));
  }
  Complex ax = amplitude(p, x);
  Complex ay = amplitude(p, y);
  return kernel_prefactor(p) / kPi * std::imag(ax * std::conj(ay)) / (x - y);
}

double chg_kernel_diag(const KernelParams& p, double x) {
  if (x == 0.0) throw DomainError("chg_kernel_diag: x = 0 is outside the domain");
  // A'(x) = A(x) (alpha/x - i + 2i M'/M), so
  // Im(A' conj A) = |A|^2 (2 Re(M'/M) - 1)
  Complex a(1.0 + p.alpha, p.b);
  Complex bb(1.0 + 2.0 * p.alpha, 0.0);
  Complex z(0.0, 2.0 * x);
  Complex m = kummer_m(a, bb, z);
  Complex md = kummer_m_deriv(a, bb, z);
  Complex ax = amplitude(p, x);
  double mod2 = std::norm(ax);
  return kernel_prefactor(p) / kPi * mod2 * (2.0 * std::real(md / m) - 1.0);
}

double sine_kernel(double x, double y) {
  double d = x - y;
  if (d == 0.0) return 1.0 / kPi;
  if (std::abs(d) < 1e-6) {
    // sin(d)/d = 1 - d^2/6 + d^4/120 - ...
    double d2 = d * d;
    return (1.0 - d2 / 6.0 * (1.0 - d2 / 20.0)) / kPi;
  }
  return std::sin(d) / (kPi * d);
}

double bessel1_kernel_half(double x, double y) {
  if (x == y) throw DomainError("bessel1_kernel_half: diagonal not supported");
  // sqrt(|xy|)/2 [J1(x) J0(y) - J0(x) J1(y)] / (x - y); the branch phases of
  // |x|^a / x^a and sqrt(xy) cancel against the parity of J0 (even), J1 (odd)
  double j1x = bessel_j01(1, x), j0x = bessel_j01(0, x);
  double j1y = bessel_j01(1, y), j0y = bessel_j01(0, y);
  return 0.5 * std::sqrt(std::abs(x * y)) * (j1x * j0y - j0x * j1y) / (x - y);
}

}  // namespace chgdet
