#pragma once

// Complex special functions underpinning the determinant routes: log-Gamma,
// Barnes G, Kummer's M and its derivative, and Bessel J0/J1 (oracle grade).

#include "chgdet/types.hpp"

namespace chgdet {

/// Principal-branch log-Gamma.  Throws DomainError at nonpositive integers.
/// exp(log_gamma(z)) matches Gamma(z) to ~1e-13 relative for |Re z|,|Im z| <= 50.
Complex log_gamma(Complex z);

/// Gamma via exp(log_gamma).
Complex gamma_fn(Complex z);

/// 1/Gamma(z); returns 0 at the poles instead of throwing.
Complex reciprocal_gamma(Complex z);

/// ln[G(1+ic) G(1-ic)] for the Barnes G-function; real because G(conj z) =
/// conj G(z).  Accepts |c| <= 10.
double barnes_g_log_pair(double c);

/// ln G(x) for real x > 0, by the Taylor series of ln G(1+w) on |w| <= 1/2
/// plus the functional equation G(z+1) = Gamma(z) G(z).
double log_barnes_g_real(double x);

/// Kummer's confluent hypergeometric function M(a,b,z) = 1F1(a;b;z).
/// Power series (double-double accumulation) for |z| <= 30, large-z
/// asymptotic expansion for 30 < |z| <= 120.
Complex kummer_m(Complex a, Complex b, Complex z);

/// d/dz M(a,b,z) = (a/b) M(a+1,b+1,z).
Complex kummer_m_deriv(Complex a, Complex b, Complex z);

/// Bessel J0 (k=0) or J1 (k=1), absolute error <= 1e-12 for |x| <= 200.
double bessel_j01(int k, double x);

namespace detail {
// Both Kummer evaluation paths, exposed for the cross-validation suite.
Complex kummer_m_series(Complex a, Complex b, Complex z);
Complex kummer_m_asymptotic(Complex a, Complex b, Complex z);
}  // namespace detail

}  // namespace chgdet
