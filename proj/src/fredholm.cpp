#include "chgdet/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chgdet/kernel.hpp"
#include "chgdet/quadrature.hpp"

namespace chgdet {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

QuadratureGrid make_gap_grid(const KernelParams& p, double s, int n) {
  if (!(s > 0.0)) throw DomainError("make_gap_grid: s must be positive");
  if (n % 2 != 0) throw DomainError("make_gap_grid: n must be even");
  if (n < 8 || n > 8192) throw DomainError("make_gap_grid: node count outside [8, 8192]");
  const int half = n / 2;

  QuadratureGrid grid;
  grid.s = s;
  grid.n = n;
  grid.nodes.resize(n);
  grid.weights.resize(n);

  if (p.alpha >= 0.0) {
    QuadratureRule rule = gauss_legendre(half);
    for (int i = 0; i < half; ++i) {
      double y = 0.5 * s * (rule.nodes[i] + 1.0);  // (0, s)
      double w = 0.5 * s * rule.weights[i];
      grid.nodes[half + i] = y;
      grid.weights[half + i] = w;
      grid.nodes[half - 1 - i] = -y;
      grid.weights[half - 1 - i] = w;
    }
  } else {
    // Gauss-Jacobi with the |x|^{2 alpha} factor concentrated at x = 0: weight
    // (1+x)^{2 alpha} on (-1,1) mapped to (0,s).  Stored weights are the plain
    // dy weights w~_j y_j^{-2 alpha}, so sqrt(w) K sqrt(w) reproduces the
    // conjugated smooth-kernel discretization exactly.
    QuadratureRule rule = gauss_jacobi(half, 0.0, 2.0 * p.alpha);
    for (int i = 0; i < half; ++i) {
      double y = 0.5 * s * (rule.nodes[i] + 1.0);
      double w_jac = std::pow(0.5 * s, 2.0 * p.alpha + 1.0) * rule.weights[i];
      double w = w_jac * std::pow(y, -2.0 * p.alpha);
      grid.nodes[half + i] = y;
      grid.weights[half + i] = w;
      grid.nodes[half - 1 - i] = -y;
      grid.weights[half - 1 - i] = w;
    }
  }
  return grid;
}

DiscretizedOperator build_operator(const KernelParams& p, double s, int n) {
  p.validate();
  DiscretizedOperator op;
  op.grid = make_gap_grid(p, s, n);
  op.matrix.resize(n, n);

  std::vector<double> sqw(n);
  for (int i = 0; i < n; ++i) sqw[i] = std::sqrt(op.grid.weights[i]);

  // Precompute amplitudes; every off-diagonal entry is then O(1) arithmetic.
  std::vector<Complex> amp(n);
  for (int i = 0; i < n; ++i) amp[i] = amplitude(p, op.grid.nodes[i]);
  const double pref = kernel_prefactor(p) / kPi;

  for (int i = 0; i < n; ++i) {
    op.matrix(i, i) = op.grid.weights[i] * chg_kernel_diag(p, op.grid.nodes[i]);
    for (int j = i + 1; j < n; ++j) {
      double xi = op.grid.nodes[i], xj = op.grid.nodes[j];
      double k;
      if (xj - xi < 1e-4 && xi * xj > 0.0) {
        k = chg_kernel_diag(p, 0.5 * (xi + xj));
      } else {
        k = pref * std::imag(amp[i] * std::conj(amp[j])) / (xi - xj);
      }
      double entry = sqw[i] * k * sqw[j];
      op.matrix(i, j) = entry;
      op.matrix(j, i) = entry;
    }
  }
  return op;
}

double log_det(const DiscretizedOperator& op, double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("log_det: gamma must lie in [0, 1)");
  if (gamma == 0.0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("log_det: eigensolver failed");
  double total = 0.0;
  for (double lambda : solver.eigenvalues()) {
    double factor = 1.0 - gamma * lambda;
    if (factor <= 0.0)
      throw NumericalError("log_det: nonpositive factor 1 - gamma*lambda (discretization artifact)");
    total += std::log1p(-gamma * lambda);
  }
  return total;
}

double log_det_lu(const DiscretizedOperator& op, double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw DomainError("log_det_lu: gamma must lie in [0, 1)");
  const auto n = op.matrix.rows();
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - gamma * op.matrix;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  double total = 0.0;
  int sign = lu.permutationP().determinant() > 0 ? 1 : -1;
  for (Eigen::Index i = 0; i < n; ++i) {
    double piv = lu.matrixLU()(i, i);
    if (piv < 0.0) sign = -sign;
    if (piv == 0.0) throw NumericalError("log_det_lu: singular factor");
    total += std::log(std::abs(piv));
  }
  if (sign < 0) throw NumericalError("log_det_lu: negative determinant (discretization artifact)");
  return total;
}

ConvergedLogDet log_det_converged(const KernelParams& p, double s, double gamma,
                                  double tol, int n0) {
  if (!(tol >= 1e-12)) throw DomainError("log_det_converged: tol must be >= 1e-12");
  if (gamma == 0.0) {
    // exact for every grid; report the smallest budget
    return {0.0, n0 > 0 ? n0 : 64, 0.0};
  }
  int n = n0 > 0 ? n0 : std::max(64, 2 * int(std::ceil(4.0 * s)));
  if (n % 2 != 0) ++n;
  double prev = log_det(build_operator(p, s, n), gamma);
  while (2 * n <= 8192) {
    n *= 2;
    double cur = log_det(build_operator(p, s, n), gamma);
    double diff = std::abs(cur - prev);
    if (diff < tol) return {cur, n, diff};
    prev = cur;
  }
  throw ConvergenceError("log_det_converged: not converged at n = 8192");
}

std::vector<double> eigenvalues(const DiscretizedOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalues: eigensolver failed");
  std::vector<double> vals(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + op.matrix.rows());
  std::sort(vals.begin(), vals.end(), std::greater<>());
  if (!vals.empty() && (vals.front() > 1.0 + 1e-8 || vals.back() < -1e-8))
    throw NumericalError("eigenvalues: spectrum escapes [-1e-8, 1+1e-8]");
  return vals;
}

}  // namespace chgdet
