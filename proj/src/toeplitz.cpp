#include "chgdet/toeplitz.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "chgdet/quadrature.hpp"

namespace chgdet {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void SymbolSpec::validate() const {
  if (!(alpha > -0.5)) throw DomainError("SymbolSpec: alpha must exceed -1/2");
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("SymbolSpec: gamma must lie in [0, 1)");
  if (!(arc_t >= 0.0 && arc_t < kPi)) throw DomainError("SymbolSpec: arc_t must lie in [0, pi)");
  if (!std::isfinite(b)) throw DomainError("SymbolSpec: b must be finite");
}

double symbol_value(const SymbolSpec& spec, double theta) {
  if (!(theta > 0.0 && theta < 2.0 * kPi))
    throw DomainError("symbol_value: theta must lie in (0, 2 pi)");
  double f = (theta < spec.arc_t || theta > 2.0 * kPi - spec.arc_t) ? 1.0 - spec.gamma : 1.0;
  return std::pow(2.0 * std::sin(0.5 * theta), 2.0 * spec.alpha) *
         std::exp(-spec.b * (theta - kPi)) * f;
}

namespace {

// Integration context for one refinement level.
struct PanelScheme {
  QuadratureRule gl;      // smooth panels
  QuadratureRule jacobi;  // head panel, weight phi^{2 alpha}
  double osc_len;         // max panel length times (|k|+1)
};

// int_0^pi (2 sin(phi/2))^{2 alpha} e^{b_eff phi} e^{-i k phi} f_arc(phi) dphi
// with f_arc = 1-gamma on [0, t), 1 on (t, pi].  The phi^{2 alpha} behavior at
// 0 sits inside the Jacobi head panel; panels are graded away from 0 and kept
// short against the e^{-ik phi} oscillation.
Complex half_integral(const SymbolSpec& spec, int k, double b_eff,
                      const PanelScheme& ps) {
  const double t = spec.arc_t;
  const double f_head = 1.0 - spec.gamma;
  const double osc = ps.osc_len / (std::abs(k) + 1.0);

  auto smooth_part = [&](double phi) {
    return std::pow(2.0 * std::sin(0.5 * phi), 2.0 * spec.alpha) *
           std::exp(b_eff * phi);
  };
  auto phase = [&](double phi) { return std::polar(1.0, -k * phi); };

  Complex total = 0.0;

  // head panel [0, h]: weight phi^{2 alpha}, remainder analytic
  const double seg1_end = t > 0.0 ? t : kPi;
  const double h = std::min({seg1_end, osc, 0.5});
  {
    const double scale = std::pow(0.5 * h, 2.0 * spec.alpha + 1.0);
    Complex acc = 0.0;
    for (size_t i = 0; i < ps.jacobi.nodes.size(); ++i) {
      double phi = 0.5 * h * (ps.jacobi.nodes[i] + 1.0);
      double sinc_pow = std::pow(2.0 * std::sin(0.5 * phi) / phi, 2.0 * spec.alpha);
      acc += ps.jacobi.weights[i] * sinc_pow * std::exp(b_eff * phi) * phase(phi);
    }
    double f = t > 0.0 ? f_head : 1.0;
    total += f * scale * acc;
  }

  // graded oscillation-limited panels over [h, t) and [t, pi]
  auto march = [&](double from, double to, double f) {
    double pos = from;
    while (pos < to - 1e-15 * to) {
      double len = std::min({pos, osc, to - pos});
      Complex acc = 0.0;
      for (size_t i = 0; i < ps.gl.nodes.size(); ++i) {
        double phi = pos + 0.5 * len * (ps.gl.nodes[i] + 1.0);
        acc += ps.gl.weights[i] * smooth_part(phi) * phase(phi);
      }
      total += f * 0.5 * len * acc;
      pos += len;
    }
  };
  if (t > 0.0) {
    march(h, t, f_head);
    march(t, kPi, 1.0);
  } else {
    march(h, kPi, 1.0);
  }
  return total;
}

Complex coeff_at_level(const SymbolSpec& spec, int k, const PanelScheme& ps) {
  // c_k = [ e^{b pi} G(k, -b) + e^{-b pi} G(-k, +b) ] / (2 pi), where G is the
  // half-range integral above (substitution phi = 2 pi - theta on the second half)
  Complex plus = std::exp(spec.b * kPi) * half_integral(spec, k, -spec.b, ps);
  Complex minus = std::exp(-spec.b * kPi) * half_integral(spec, -k, spec.b, ps);
  return (plus + minus) / (2.0 * kPi);
}

}  // namespace

Complex fourier_coeff_single(const SymbolSpec& spec, int k, double tol) {
  spec.validate();
  PanelScheme coarse{gauss_legendre(20), gauss_jacobi(24, 0.0, 2.0 * spec.alpha), 5.0};
  PanelScheme fine{gauss_legendre(28), gauss_jacobi(32, 0.0, 2.0 * spec.alpha), 2.5};
  Complex a = coeff_at_level(spec, k, coarse);
  Complex b = coeff_at_level(spec, k, fine);
  if (std::abs(a - b) <= tol) return b;
  PanelScheme finest{gauss_legendre(40), gauss_jacobi(48, 0.0, 2.0 * spec.alpha), 1.25};
  Complex c = coeff_at_level(spec, k, finest);
  if (std::abs(b - c) <= tol) return c;
  throw ConvergenceError("fourier_coeffs: quadrature did not reach the requested tolerance");
}

SymbolCoeffs fourier_coeffs(const SymbolSpec& spec, int n, double tol) {
  spec.validate();
  if (n < 1 || n > 1024) throw DomainError("fourier_coeffs: n must lie in [1, 1024]");
  SymbolCoeffs out;
  out.n = n;
  out.coeffs.assign(size_t(2 * n - 1), Complex(0.0, 0.0));
  PanelScheme coarse{gauss_legendre(20), gauss_jacobi(24, 0.0, 2.0 * spec.alpha), 5.0};
  PanelScheme fine{gauss_legendre(28), gauss_jacobi(32, 0.0, 2.0 * spec.alpha), 2.5};
  PanelScheme finest{gauss_legendre(40), gauss_jacobi(48, 0.0, 2.0 * spec.alpha), 1.25};
  for (int k = 0; k < n; ++k) {
    Complex a = coeff_at_level(spec, k, coarse);
    Complex b = coeff_at_level(spec, k, fine);
    Complex val;
    if (std::abs(a - b) <= tol) {
      val = b;
    } else {
      Complex c = coeff_at_level(spec, k, finest);
      if (std::abs(b - c) > tol)
        throw ConvergenceError("fourier_coeffs: quadrature did not reach the requested tolerance");
      val = c;
    }
    out.coeffs[size_t(k + n - 1)] = val;
    if (k > 0) out.coeffs[size_t(n - 1 - k)] = std::conj(val);  // real symbol
  }
  return out;
}

double log_toeplitz_det(const SymbolCoeffs& coeffs, int n) {
  if (n < 1 || n > coeffs.n) throw DomainError("log_toeplitz_det: n exceeds available coefficients");
  Eigen::MatrixXcd t(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) t(j, k) = coeffs.at(k - j);
  Eigen::LDLT<Eigen::MatrixXcd> ldlt(t);
  if (ldlt.info() != Eigen::Success)
    throw NumericalError("log_toeplitz_det: factorization failed");
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double pivot = ldlt.vectorD()(i).real();
    if (!(pivot > 0.0))
      throw NumericalError("log_toeplitz_det: non-positive pivot (symbol negativity or quadrature error)");
    total += std::log(pivot);
  }
  return total;
}

double scaling_limit_check(const KernelParams& p, double s, int n) {
  p.validate();
  if (n < 4 || n > 1024) throw DomainError("scaling_limit_check: n must lie in [4, 1024]");
  double t = 2.0 * s / n;
  if (!(t < kPi)) throw DomainError("scaling_limit_check: requires 2s/n < pi");
  if (p.gamma == 0.0) return 0.0;  // f == 1 makes both determinants identical
  const double tol = 1e-11;
  SymbolSpec arc{p.alpha, p.b, p.gamma, t};
  SymbolSpec base{p.alpha, p.b, p.gamma, 0.0};
  double ln_arc = log_toeplitz_det(fourier_coeffs(arc, n, tol), n);
  double ln_base = log_toeplitz_det(fourier_coeffs(base, n, tol), n);
  return ln_arc - ln_base;
}

}  // namespace chgdet
