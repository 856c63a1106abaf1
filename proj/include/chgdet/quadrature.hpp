#pragma once

// Gaussian quadrature rules on (-1, 1).

#include <vector>

#include "chgdet/types.hpp"

namespace chgdet {

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive
};

/// n-point Gauss-Legendre rule on (-1, 1).
QuadratureRule gauss_legendre(int n);

/// n-point Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on (-1, 1),
/// a, b > -1.  Reduces to Gauss-Legendre at a = b = 0.
QuadratureRule gauss_jacobi(int n, double a, double b);

}  // namespace chgdet
