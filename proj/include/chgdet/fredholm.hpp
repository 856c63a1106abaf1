#pragma once

// Nystrom discretization of the kernel operator on (-s, s), the deformed
// log-determinant, and the operator spectrum.

#include <Eigen/Dense>
#include <vector>

#include "chgdet/types.hpp"

namespace chgdet {

/// Symmetric quadrature grid on (-s, s), always split at 0 (the kernel has a
/// jump there for b != 0 and an |x|^{2 alpha} singularity for alpha < 0).
/// For alpha >= 0 each half carries a Gauss-Legendre rule; for alpha < 0 a
/// Gauss-Jacobi rule absorbing the |x|^{2 alpha} endpoint behavior.
struct QuadratureGrid {
  double s = 0.0;
  int n = 0;
  std::vector<double> nodes;    // strictly increasing, symmetric about 0
  std::vector<double> weights;  // positive plain (Lebesgue) weights
};

QuadratureGrid make_gap_grid(const KernelParams& p, double s, int n);

struct DiscretizedOperator {
  QuadratureGrid grid;
  Eigen::MatrixXd matrix;  // entries sqrt(w_i) K(x_i, x_j) sqrt(w_j)
};

/// Builds the symmetric Nystrom matrix.  Requires s > 0, n even, 8 <= n <= 8192.
DiscretizedOperator build_operator(const KernelParams& p, double s, int n);

/// ln det(I - gamma M) via symmetric eigendecomposition.  Signals if any
/// factor 1 - gamma lambda_i is nonpositive.
double log_det(const DiscretizedOperator& op, double gamma);

/// Same determinant through a pivoted LU of (I - gamma M); cross-check path.
double log_det_lu(const DiscretizedOperator& op, double gamma);

struct ConvergedLogDet {
  double value = 0.0;
  int n_used = 0;
  double est_err = 0.0;
};

/// Doubles the node count (from n0, default max(64, 2 ceil(4 s))) until two
/// successive values differ by less than tol.  Errors out at n = 8192.
ConvergedLogDet log_det_converged(const KernelParams& p, double s, double gamma,
                                  double tol, int n0 = 0);

/// Operator eigenvalues, descending.  All must lie in [-1e-8, 1 + 1e-8].
std::vector<double> eigenvalues(const DiscretizedOperator& op);

}  // namespace chgdet
