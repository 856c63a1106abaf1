#include "chgdet/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "chgdet/specfun.hpp"

namespace chgdet {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be positive");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration on P_n from the cos asymptotic guess
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(std::abs(x), 0.1)) {
        // one final refinement at the converged point
        p0 = 1.0;
        p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (x * p0 - p1) / (x * x - 1.0);
        x -= p0 / pp;
        break;
      }
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

namespace {

struct JacobiRecurrence {
  double a, b;
  double mu0;  // integral of the weight over (-1,1)

  double alpha(int k) const {
    if (k == 0) return (b - a) / (a + b + 2.0);
    double s = 2.0 * k + a + b;
    return (b * b - a * a) / (s * (s + 2.0));
  }
  double beta(int k) const {  // k >= 1
    double s = 2.0 * k + a + b;
    return 4.0 * k * (k + a) * (k + b) * (k + a + b) /
           (s * s * (s + 1.0) * (s - 1.0));
  }
};

}  // namespace

QuadratureRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_jacobi: n must be positive");
  if (!(a > -1.0 && b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");
  if (a == 0.0 && b == 0.0) return gauss_legendre(n);

  JacobiRecurrence rec{a, b, 0.0};
  rec.mu0 = std::exp((a + b + 1.0) * std::numbers::ln2 +
                     log_gamma(Complex(a + 1.0)).real() +
                     log_gamma(Complex(b + 1.0)).real() -
                     log_gamma(Complex(a + b + 2.0)).real());

  Eigen::VectorXd diag(n), subdiag(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = rec.alpha(k);
  for (int k = 1; k < n; ++k) subdiag[k - 1] = std::sqrt(rec.beta(k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("gauss_jacobi: tridiagonal eigensolver failed");

  QuadratureRule rule;
  rule.nodes.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  rule.weights.resize(n);

  std::vector<double> sqb(n);
  for (int k = 1; k < n; ++k) sqb[k] = subdiag[k - 1];
  const double p0val = 1.0 / std::sqrt(rec.mu0);

  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    // two Newton polish steps on the orthonormal polynomial p_n
    for (int it = 0; it < 2; ++it) {
      double pm = 0.0, pk = p0val, dm = 0.0, dk = 0.0;
      for (int k = 0; k < n; ++k) {
        double bnext = (k + 1 < n) ? sqb[k + 1] : std::sqrt(rec.beta(n));
        double pn = ((x - diag[k]) * pk - (k > 0 ? sqb[k] : 0.0) * pm) / bnext;
        double dn = (pk + (x - diag[k]) * dk - (k > 0 ? sqb[k] : 0.0) * dm) / bnext;
        pm = pk;
        pk = pn;
        dm = dk;
        dk = dn;
      }
      if (dk != 0.0) x -= pk / dk;
    }
    rule.nodes[i] = x;
    // Christoffel weight: 1 / sum_{k<n} p_k(x)^2
    double pm = 0.0, pk = p0val, sum = p0val * p0val;
    for (int k = 0; k + 1 < n; ++k) {
      double pn = ((x - diag[k]) * pk - (k > 0 ? sqb[k] : 0.0) * pm) / sqb[k + 1];
      pm = pk;
      pk = pn;
      sum += pn * pn;
    }
    rule.weights[i] = 1.0 / sum;
  }
  return rule;
}

}  // namespace chgdet
