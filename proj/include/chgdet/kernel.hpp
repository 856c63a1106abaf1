#pragma once

// The confluent hypergeometric kernel K^(alpha,beta)(x,y), its diagonal, and
// the sine / type-I Bessel reductions.

#include "chgdet/types.hpp"

namespace chgdet {

/// The amplitude function A(x) = chi^{1/2}(x) |2x|^alpha e^{-ix}
/// M(1+alpha+ib, 1+2 alpha, 2ix); the kernel numerator is 2i Im(A(x) conj A(y)).
Complex amplitude(const KernelParams& p, double x);

/// Kernel prefactor Gamma(1+alpha+ib) Gamma(1+alpha-ib) / Gamma(1+2 alpha)^2,
/// real and positive.
double kernel_prefactor(const KernelParams& p);

/// K(x,y) for x != y, x*y != 0.
double chg_kernel(const KernelParams& p, double x, double y);

/// Diagonal value K(x,x), x != 0.
double chg_kernel_diag(const KernelParams& p, double x);

/// sin(x-y) / (pi (x-y)); diagonal limit 1/pi.
double sine_kernel(double x, double y);

/// The alpha = 1/2, b = 0 reduction written with J1, J0.
double bessel1_kernel_half(double x, double y);

}  // namespace chgdet
