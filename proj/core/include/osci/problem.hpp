#pragma once

#include "osci/specfun.hpp"

namespace osci {

/// Parameters of I[f] = int_0^1 f(x) x^alpha (1-x)^beta e^{2ikx} H^(1)_nu(omega x) dx.
///
/// Construction validates alpha - |nu| > -1, beta > -1, omega > 0, k >= 0.
class ProblemParams {
 public:
  ProblemParams(double alpha, double beta, double nu, double k, double omega);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  specfun::Order nu() const noexcept { return nu_; }
  double k() const noexcept { return k_; }
  double omega() const noexcept { return omega_; }

  /// k + omega/2, the largest index for which forward recursion is stable.
  double stability_threshold() const noexcept { return k_ + 0.5 * omega_; }

  /// omega == 2k exactly: the recurrence loses its outermost terms.
  bool degenerate() const noexcept { return omega_ == 2.0 * k_; }

  ProblemParams with_alpha(double v) const { return {v, beta_, nu_.value(), k_, omega_}; }
  ProblemParams with_beta(double v) const { return {alpha_, v, nu_.value(), k_, omega_}; }
  ProblemParams with_k(double v) const { return {alpha_, beta_, nu_.value(), v, omega_}; }
  ProblemParams with_omega(double v) const { return {alpha_, beta_, nu_.value(), k_, v}; }

 private:
  double alpha_;
  double beta_;
  specfun::Order nu_;
  double k_;
  double omega_;
};

}  // namespace osci
