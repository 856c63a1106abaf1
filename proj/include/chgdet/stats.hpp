#pragma once

// Counting-function statistics of the determinantal process on (-s, s):
// moments, exact Poisson-binomial distribution, generating-function identity,
// and the distance to the normal law.

#include <vector>

#include "chgdet/types.hpp"

namespace chgdet {

struct CountingSummary {
  double s = 0.0;
  double e_n = 0.0;              // mean  = sum lambda_i
  double var_n = 0.0;            // variance = sum lambda_i (1 - lambda_i)
  std::vector<double> pmf;       // P(N = 0..n_max)
  double ks_normal = 0.0;        // sup distance of the standardized CDF to Phi
  int n_eigs_used = 0;           // eigenvalues kept above the 1e-14 cutoff
};

/// Eigenvalue statistics of the unthinned operator (gamma is ignored here;
/// thinning enters only through the generating-function identity).
/// n_quad = 0 picks the resolution heuristic max(128, 2 ceil(8 s)).
CountingSummary counting_summary(const KernelParams& p, double s, int n_quad = 0);

struct GenfuncCheck {
  double lhs = 0.0;  // sum_k pmf[k] e^{-2 pi nu k}
  double rhs = 0.0;  // det(I - (1 - e^{-2 pi nu}) K_s), same eigenvalues
};

GenfuncCheck genfunc_check(const KernelParams& p, double s, double nu, int n_quad = 0);

struct MomentGap {
  double mean_gap = 0.0;  // |e_n - (2s/pi - alpha)|
  double var_gap = 0.0;   // |var_n - (ln s/pi^2 + (1+gammaE+2ln2)/pi^2)|
};

MomentGap moment_asym_gap(const KernelParams& p, double s, int n_quad = 0);

}  // namespace chgdet
