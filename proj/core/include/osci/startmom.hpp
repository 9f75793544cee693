#pragma once

// Starting integrals I(j) = int_0^1 x^{alpha+j} (1-x)^beta e^{2ikx} H^(1)_nu(omega x) dx, j = 0..4,
// and the starting moments M(0..4) built from them.
//
// Rotating the path of integration from each endpoint into the upper half
// plane gives I(j) = L0(j) - L1(j) with two non-oscillatory half-line
// integrals. With c = 2k + omega:
//
//   L0(j) = 2 i^{alpha+j} / (i^nu pi) int_0^inf (1 - is)^beta K_nu(omega s) s^{alpha+j} e^{-2ks} ds
//   L1(j) = (-i)^beta i e^{ic} / c^{1+beta}
//           int_0^inf (1 + it/c)^{alpha+j} h_nu(omega + i omega t / c) t^beta e^{-t} dt
//
// where h_nu(z) = e^{-iz} H^(1)_nu(z). L0 has a weak singularity at s = 0 and
// is summed on a geometrically graded mesh; L1 is smooth and uses generalized
// Gauss-Laguerre with weight t^beta e^{-t}.

#include <array>
#include <complex>

#include "osci/oracle.hpp"
#include "osci/problem.hpp"
#include "osci/quadrature_rules.hpp"

namespace osci::startmom {

using cplx = std::complex<double>;
using ContourRule = quad::Rule;

/// n-point rule for int_0^inf x^gamma e^{-x} p(x) dx.
ContourRule gauss_laguerre_general(double gamma, int n);

struct StartOptions {
  /// Smallest L1 rule; the rule is doubled until two sizes agree.
  int laguerre_points = 10;
  int max_laguerre_points = 80;
  /// Relative agreement required between consecutive rule sizes.
  double agreement_tol = 1e-10;
  /// Below this omega the contour path is not attempted.
  double omega_min = 1.0;
  bool oracle_fallback = true;
  oracle::OracleConfig oracle;
};

enum class StartPath { contour, oracle };

struct StartingIntegrals {
  std::array<cplx, 5> values{};
  StartPath path = StartPath::contour;
  /// Relative disagreement of the last two L1 rule sizes (contour path).
  double est_error = 0.0;
  int laguerre_points = 0;
};

/// L0(j), j = 0..4.
std::array<cplx, 5> contour_l0(const ProblemParams& p);

/// L1(j), j = 0..4, with an n-point rule.
std::array<cplx, 5> contour_l1(const ProblemParams& p, int n);

/// All five starting integrals; falls back to the oracle when the contour
/// path is unavailable or its rule sizes disagree (AccuracyError when the
/// fallback is disabled).
StartingIntegrals starting_integrals(const ProblemParams& p, const StartOptions& opts = {});

cplx starting_integral(const ProblemParams& p, int j, const StartOptions& opts = {});

/// M(0..4) from I(0..4) via the monomial expansions of T*_0..T*_4.
std::array<cplx, 5> moments_from_integrals(const std::array<cplx, 5>& I);

std::array<cplx, 5> starting_moments(const ProblemParams& p, const StartOptions& opts = {});

}  // namespace osci::startmom
