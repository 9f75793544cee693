#pragma once

// Slow reference integrator for I[g] = int_0^1 g(x) x^alpha (1-x)^beta e^{2ikx} H^(1)_nu(omega x) dx.
//
// [0, 1] is split into geometrically graded panels toward 0 (and toward 1 when
// beta < 0 or a ln(1-x) factor is present) plus uniform panels narrow enough to
// resolve the oscillation. End panels use Gauss-Jacobi rules carrying the
// algebraic weight; everything else is Gauss-Legendre. The whole sum is
// recomputed with twice the points per panel and the two results must agree.

#include <complex>
#include <functional>
#include <string_view>

#include "osci/cheb.hpp"
#include "osci/problem.hpp"

namespace osci::oracle {

using cplx = std::complex<double>;

struct OracleConfig {
  int panels_per_wavelength = 6;
  double grading_ratio = 0.15;
  int points_per_panel = 15;
  double abs_floor = 1e-16;
  /// Required relative agreement between the n- and 2n-point sums.
  double rel_tol = 1e-11;
  /// k + omega beyond which the oracle is considered intractable; exceeding it
  /// only triggers the warning callback.
  double frequency_cap = 400.0;
  std::function<void(std::string_view)> warn;
};

/// Extra factors and test hooks.
struct WeightOptions {
  bool log_x = false;          // multiply by ln(x)
  bool log_1mx = false;        // multiply by ln(1-x)
  bool bypass_kernel = false;  // replace e^{2ikx} H_nu(omega x) by 1
  /// Additional angular frequency of g, used to size the uniform panels.
  double g_frequency = 0.0;
};

cplx reference_integral(const std::function<cplx(double)>& g, const ProblemParams& p,
                        const OracleConfig& cfg = {}, const WeightOptions& w = {});

cplx reference_integral(const cheb::Integrand& g, const ProblemParams& p,
                        const OracleConfig& cfg = {}, const WeightOptions& w = {});

/// M(n) = reference_integral(T*_n).
cplx reference_moment(const ProblemParams& p, int n, const OracleConfig& cfg = {},
                      const WeightOptions& w = {});

}  // namespace osci::oracle
