#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace chgdet {

using Complex = std::complex<double>;

/// Thrown when an argument lies outside the mathematical domain of an
/// operation (poles, range violations, size limits).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative scheme misses its internal accuracy target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on runtime numerical failure: solution blow-up, step underflow,
/// non-positive pivots, eigensolver breakdown.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter triple (alpha, b, gamma) with beta = i*b.  Governs every
/// determinant route.
struct KernelParams {
  double alpha = 0.0;  ///< algebraic singularity exponent, alpha > -1/2
  double b = 0.0;      ///< imaginary part of beta (beta = i*b)
  double gamma = 0.0;  ///< thinning survival parameter, 0 <= gamma < 1

  void validate() const {
    if (!(alpha > -0.5)) throw DomainError("KernelParams: alpha must exceed -1/2");
    if (!(gamma >= 0.0 && gamma < 1.0))
      throw DomainError("KernelParams: gamma must lie in [0, 1)");
    if (!std::isfinite(b)) throw DomainError("KernelParams: b must be finite");
  }
};

}  // namespace chgdet
