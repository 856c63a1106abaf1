#pragma once

// Fisher-Hartwig Toeplitz determinants D_n(t) and the scaling-limit route
// D_n(2s/n)/D_n(0) -> det(I - gamma K_s).

#include <vector>

#include "chgdet/types.hpp"

namespace chgdet {

/// Symbol w(e^{i theta}) = |e^{i theta}-1|^{2 alpha} e^{-b(theta-pi)} f, with
/// f = 1-gamma on the arc |arg z| < arc_t and 1 elsewhere.  Real and strictly
/// positive on (0, 2 pi).
struct SymbolSpec {
  double alpha = 0.0;
  double b = 0.0;
  double gamma = 0.0;
  double arc_t = 0.0;  // in [0, pi)

  void validate() const;
};

/// Symbol value at angle theta in (0, 2 pi).
double symbol_value(const SymbolSpec& spec, double theta);

/// Fourier coefficients c_{-(n-1)} .. c_{n-1} of the symbol.
struct SymbolCoeffs {
  int n = 0;
  std::vector<Complex> coeffs;  // index k + n - 1

  Complex at(int k) const { return coeffs[size_t(k + n - 1)]; }
};

/// c_k = (1/2 pi) int_0^{2 pi} w(e^{i th}) e^{-i k th} d th to absolute
/// accuracy tol.  Quadrature splits at the arc jumps and uses Gauss-Jacobi
/// panels against the theta^{2 alpha} endpoint behavior.
SymbolCoeffs fourier_coeffs(const SymbolSpec& spec, int n, double tol);

/// Independent single-coefficient evaluation (negative k allowed); test hook.
Complex fourier_coeff_single(const SymbolSpec& spec, int k, double tol);

/// ln D_n through a pivoted factorization of the Hermitian positive-definite
/// Toeplitz matrix; never forms the raw determinant.
double log_toeplitz_det(const SymbolCoeffs& coeffs, int n);

/// ln D_n(arc_t = 2s/n) - ln D_n(arc_t = 0) at the given kernel parameters.
double scaling_limit_check(const KernelParams& p, double s, int n);

}  // namespace chgdet
