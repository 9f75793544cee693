#pragma once

// Clenshaw-Curtis-Filon-type rule
//   Q_{N,s}[f] = sum_{n=0}^{N+2s} a_n M(n),
// where sum a_n T*_n is the Hermite-corrected Clenshaw-Curtis interpolant of f.

#include <complex>
#include <vector>

#include "osci/cheb.hpp"
#include "osci/moments.hpp"
#include "osci/problem.hpp"
#include "osci/startmom.hpp"

namespace osci::ccf {

using cplx = std::complex<double>;

struct MethodConfig {
  int N = 8;
  int s = 0;
  double bvp_tol = 1e-12;
  double forward_safety = 0.9;
  startmom::StartOptions start;

  /// Throws DomainError unless N >= 2, s >= 0, 0 < forward_safety <= 1, bvp_tol > 0.
  void validate() const;
};

struct StageTimings {
  double interpolation_ms = 0.0;
  double starting_ms = 0.0;
  double recurrence_ms = 0.0;
  double summation_ms = 0.0;
};

struct QuadResult {
  cplx value;
  int n_moments_starting = 0;
  int n_moments_forward = 0;
  int n_moments_bvp = 0;
  bool starting_from_oracle = false;
  /// Diagnostic only: size of the last three terms plus propagated moment error.
  double est_error = 0.0;
  StageTimings timings;
};

/// Moments M(0..n_max) for p: starting integrals, forward recursion, boundary-value solve.
moments::MomentTable moment_table(const ProblemParams& p, int n_max, const MethodConfig& cfg,
                                  bool* starting_from_oracle = nullptr);

/// Hermite-corrected interpolant coefficients a_0..a_{N+2s}.
cheb::ChebSeries ccf_coefficients(const cheb::Integrand& f, int N, int s);

/// sum_n a_n M(n); the table must cover the series degree.
cplx ccf_sum(const cheb::ChebSeries& a, const moments::MomentTable& m);

QuadResult ccf_integrate(const cheb::Integrand& f, const ProblemParams& p, const MethodConfig& cfg);

/// Same rule with precomputed moments.
QuadResult ccf_integrate(const cheb::Integrand& f, const moments::MomentTable& m,
                         const MethodConfig& cfg);

struct ConvergenceCell {
  int s = 0;
  int N = 0;
  cplx value;
  double rel_error = 0.0;
};

/// Relative errors |Q_{N,s} - reference| / |reference| over the (s, N) grid,
/// ordered by s then N. The moment table is computed once for the largest N + 2s.
std::vector<ConvergenceCell> convergence_table(const cheb::Integrand& f, const ProblemParams& p,
                                               const std::vector<int>& Ns, const std::vector<int>& ss,
                                               cplx reference, const MethodConfig& base = {});

}  // namespace osci::ccf
