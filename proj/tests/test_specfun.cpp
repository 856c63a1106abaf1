#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chgdet/specfun.hpp"

using namespace chgdet;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

// Golden values from tests/oracle/make_golden.py (mpmath, 200 digits).
const Complex kLogGamma1PlusI{-0.65092319930185633889, -0.30164032046753319789};
const Complex kLogGammaReflect{-7.4782360420503149704, -5.7261042719103868422};
const Complex kLogGammaFarIm{-62.835129518830187349, -107.16273950189910137};
const Complex kLogGammaBig{82.806226961905236638, 73.686642775340719644};
}  // namespace

TEST_CASE("log_gamma basics") {
  CHECK(log_gamma(Complex(1.0)).real() == Approx(0.0).epsilon(1e-14));
  CHECK(std::abs(log_gamma(Complex(1.0))) < 1e-14);
  CHECK(log_gamma(Complex(0.5)).real() == Approx(std::log(std::sqrt(kPi))).epsilon(1e-14));

  // |Gamma(1+i)|^2 = pi/sinh(pi)
  double mod2 = std::norm(std::exp(log_gamma(Complex(1.0, 1.0))));
  CHECK(mod2 == Approx(kPi / std::sinh(kPi)).epsilon(1e-13));

  CHECK(std::abs(log_gamma(Complex(1.0, 1.0)) - kLogGamma1PlusI) < 1e-13);
  CHECK(std::abs(log_gamma(Complex(-2.5, 3.0)) - kLogGammaReflect) < 1e-12);
  CHECK(std::abs(log_gamma(Complex(0.25, -40.0)) - kLogGammaFarIm) < 2e-12);
  CHECK(std::abs(log_gamma(Complex(35.0, 20.5)) - kLogGammaBig) < 2e-12);
}

TEST_CASE("log_gamma pole error") {
  CHECK_THROWS_AS((void)log_gamma(Complex(0.0)), DomainError);
  CHECK_THROWS_AS((void)log_gamma(Complex(-3.0)), DomainError);
}

TEST_CASE("Gamma recurrence on a random box") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> re(-49.0, 49.0), im(-49.0, 49.0);
  for (int i = 0; i < 100; ++i) {
    Complex z(re(rng), im(rng));
    if (std::abs(z.imag()) < 0.1) z += Complex(0.0, 0.2);  // stay off the poles
    Complex g1 = std::exp(log_gamma(z + 1.0));
    Complex g0 = std::exp(log_gamma(z));
    CHECK(std::abs(g1 - z * g0) / std::abs(g1) < 1e-12);
  }
}

TEST_CASE("barnes_g_log_pair values") {
  CHECK(barnes_g_log_pair(0.0) == 0.0);
  // paper's Taylor line G(1+nu) = 1 + (ln(2pi)-1)/2 nu + ... at nu = +-0.01i:
  // the pair sum starts at (1 - ln(2pi)/2... ) c^2; compare against the mpmath
  // product value
  CHECK(barnes_g_log_pair(0.01) == Approx(0.00015771555655125486641).epsilon(1e-11));
  CHECK(barnes_g_log_pair(0.1) == Approx(0.015712396945444038409).epsilon(1e-11));
  CHECK(barnes_g_log_pair(0.35) == Approx(0.18477336982841304356).epsilon(1e-11));
  CHECK(barnes_g_log_pair(0.5) == Approx(0.36131774095303672438).epsilon(1e-11));
  CHECK(barnes_g_log_pair(1.0) == Approx(1.1798900400369988195).epsilon(1e-11));
  CHECK(barnes_g_log_pair(2.0) == Approx(2.7832863965940706159).epsilon(1e-11));
  CHECK(barnes_g_log_pair(5.0) == Approx(-3.3346931481487375593).epsilon(1e-10));
  CHECK(barnes_g_log_pair(10.0) == Approx(-80.973032235816848093).epsilon(1e-10));
  CHECK(barnes_g_log_pair(-1.0) == Approx(barnes_g_log_pair(1.0)).epsilon(1e-14));
  CHECK_THROWS_AS((void)barnes_g_log_pair(10.5), DomainError);
}

TEST_CASE("barnes series/quadrature crossover is seamless") {
  for (double c : {0.40, 0.45, 0.49, 0.51, 0.55, 0.60}) {
    // reference: same quantity through the other evaluation path is covered by
    // the golden checks; here assert smoothness across c = 0.5
    double below = barnes_g_log_pair(c - 1e-6);
    double above = barnes_g_log_pair(c + 1e-6);
    CHECK(std::abs(above - below) < 1e-5);
  }
}

TEST_CASE("Barnes functional equation at integer points") {
  // G(n+1) = Gamma(n) G(n), n = 1..8
  for (int n = 1; n <= 8; ++n) {
    double lhs = log_barnes_g_real(n + 1.0);
    double rhs = log_gamma(Complex(double(n))).real() + log_barnes_g_real(double(n));
    CHECK(lhs == Approx(rhs).epsilon(1e-11));
  }
  CHECK(log_barnes_g_real(5.0) == Approx(std::log(12.0)).epsilon(1e-12));  // G(5) = 12
  CHECK(log_barnes_g_real(3.75) == Approx(0.43006569881262050264).epsilon(1e-12));
}

TEST_CASE("kummer_m trivial and golden values") {
  CHECK(std::abs(kummer_m(Complex(1.3, 0.4), Complex(2.0), Complex(0.0)) - 1.0) < 1e-15);
  for (double x : {0.5, 3.0, 11.0, 19.9}) {
    Complex z(0.0, x);
    CHECK(std::abs(kummer_m(Complex(1.0), Complex(1.0), z) - std::exp(z)) < 1e-10);
  }
  CHECK(std::abs(kummer_m(Complex(2.0), Complex(3.0), Complex(1.0)) - 2.0) < 1e-13);
  CHECK(std::abs(kummer_m(Complex(3.0), Complex(4.0), Complex(1.0)) -
                 Complex(2.1548454853771357061)) < 1e-13);
  // 200-digit series oracle, frozen:
  CHECK(std::abs(kummer_m(Complex(1.5, 0.3), Complex(2.0), Complex(0.0, 2.0)) -
                 Complex(-0.010466432298661248823, 0.64187491237731107424)) < 1e-12);
  CHECK(std::abs(kummer_m(Complex(1.5, 0.3), Complex(2.0), Complex(0.0, 35.0)) -
                 Complex(-0.091988515232337260252, -0.080300031044345342183)) < 1e-10);
  CHECK(std::abs(kummer_m(Complex(1.5, 0.3), Complex(2.0), Complex(0.0, -28.0)) -
                 Complex(0.15322598621366647911, -0.31366300963480025347)) < 1e-11);
  CHECK(std::abs(kummer_m(Complex(0.7, -1.1), Complex(1.4), Complex(0.0, 60.0)) -
                 Complex(0.037544736624876743607, -0.24048647277318977097)) < 1e-10);
}

TEST_CASE("kummer_m errors") {
  CHECK_THROWS_AS((void)kummer_m(Complex(1.0), Complex(0.0), Complex(1.0)), DomainError);
  CHECK_THROWS_AS((void)kummer_m(Complex(1.0), Complex(-2.0), Complex(1.0)), DomainError);
  CHECK_THROWS_AS((void)kummer_m(Complex(1.0), Complex(2.0), Complex(0.0, 125.0)), DomainError);
}

TEST_CASE("kummer_m_deriv identities") {
  CHECK(std::abs(kummer_m_deriv(Complex(1.0), Complex(1.0), Complex(0.0)) - 1.0) < 1e-14);
  Complex a(1.7, -0.2), b(2.4, 0.0);
  CHECK(std::abs(kummer_m_deriv(a, b, Complex(0.0)) - a / b) < 1e-14);
  Complex expect = 2.0 / 3.0 * kummer_m(Complex(3.0), Complex(4.0), Complex(1.0));
  CHECK(std::abs(kummer_m_deriv(Complex(2.0), Complex(3.0), Complex(1.0)) - expect) < 1e-13);
}

TEST_CASE("kummer derivative vs central finite differences") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> par(0.2, 2.5), arg(-8.0, 8.0);
  const double h = 1e-5;
  for (int i = 0; i < 50; ++i) {
    Complex a(par(rng), 0.3 * par(rng));
    Complex b(1.0 + par(rng), 0.0);
    Complex z(arg(rng), arg(rng));
    Complex fd = (kummer_m(a, b, z + h) - kummer_m(a, b, z - h)) / (2.0 * h);
    Complex an = kummer_m_deriv(a, b, z);
    CHECK(std::abs(fd - an) / std::max(1.0, std::abs(an)) < 1e-6);
  }
}

TEST_CASE("kummer conjugation symmetry") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int i = 0; i < 30; ++i) {
    Complex a(1.0 + d(rng) * 0.3, d(rng));
    Complex b(1.8 + 0.2 * d(rng), 0.0);
    Complex z(d(rng), d(rng) * 4.0);
    Complex lhs = kummer_m(std::conj(a), std::conj(b), std::conj(z));
    Complex rhs = std::conj(kummer_m(a, b, z));
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("kummer series vs asymptotic expansion on the annulus") {
  // both evaluation paths agree to 1e-8 on 25 <= |z| <= 35 (kernel parameters)
  for (int i = 0; i < 21; ++i) {
    double r = 25.0 + 10.0 * i / 20.0;
    for (double sign : {1.0, -1.0}) {
      Complex z(0.0, sign * r);
      Complex a(1.5, 0.3), b(2.0, 0.0);
      Complex se = detail::kummer_m_series(a, b, z);
      Complex as = detail::kummer_m_asymptotic(a, b, z);
      CHECK(std::abs(se - as) / std::abs(se) < 1e-8);
      Complex a2(1.0, -0.7), b2(1.0, 0.0);
      Complex se2 = detail::kummer_m_series(a2, b2, z);
      Complex as2 = detail::kummer_m_asymptotic(a2, b2, z);
      CHECK(std::abs(se2 - as2) / std::abs(se2) < 1e-8);
    }
  }
}

TEST_CASE("bessel_j01 values") {
  CHECK(bessel_j01(0, 0.0) == 1.0);
  CHECK(bessel_j01(1, 0.0) == 0.0);
  CHECK(std::abs(bessel_j01(0, 2.404825557695773)) < 1e-10);  // first J0 zero
  CHECK(bessel_j01(0, 1.7) == Approx(0.39798485944610949114).epsilon(1e-13));
  CHECK(bessel_j01(1, 153.2) == Approx(0.06438360117473452508).epsilon(1e-11));
  CHECK(bessel_j01(0, 199.5) == Approx(-0.039613637334785146078).epsilon(1e-11));
  // parity
  CHECK(bessel_j01(0, -1.7) == Approx(bessel_j01(0, 1.7)).epsilon(1e-15));
  CHECK(bessel_j01(1, -3.3) == Approx(-bessel_j01(1, 3.3)).epsilon(1e-15));
  CHECK_THROWS_AS((void)bessel_j01(0, 220.0), DomainError);
  CHECK_THROWS_AS((void)bessel_j01(2, 1.0), DomainError);
}
