#pragma once

// Modified moments M(n) = int_0^1 x^alpha (1-x)^beta T*_n(x) e^{2ikx} H^(1)_nu(omega x) dx
// and the nine-term recurrence they satisfy,
//
//   sum_{j=-4..4} c_j(n) M(n+j) = 0,   M(-n) = M(n),
//
// which is valid for every integer n. When omega == 2k the outer coefficients
// vanish and the recurrence has seven terms.
//
// Forward recursion is used while it is stable; beyond that the moments are
// the solution of a banded boundary-value problem: the first moments are
// known, the recurrence rows are imposed up to a far endpoint E, and the
// values just past E are set to zero (or supplied by the caller). The number
// of tail values equals the number of dominant solutions: two for the
// nine-term recurrence, one for the seven-term one.

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "osci/problem.hpp"

namespace osci::moments {

using cplx = std::complex<double>;

struct RecurrenceCoeffs {
  /// c[j] multiplies M(n + 4 - j): c[0] = c_{+4}, c[4] = c_0, c[8] = c_{-4}.
  std::array<cplx, 9> c{};

  /// Coefficient of M(n + offset), offset in [-4, 4].
  cplx at(int offset) const { return c[4 - offset]; }
};

RecurrenceCoeffs recurrence_coeffs(const ProblemParams& p, int n);

/// Partial derivatives of the coefficients with respect to the weight
/// exponents; these drive the recurrences for log-weighted moments.
enum class CoeffDerivative { alpha, beta, alpha_beta };
RecurrenceCoeffs recurrence_coeff_derivatives(const ProblemParams& p, int n, CoeffDerivative d);

enum class Regime : unsigned char { starting, forward, bvp };

struct MomentTable {
  ProblemParams params;
  std::vector<cplx> values;    // M(0..n_max)
  std::vector<Regime> regime;  // per entry
  /// Relative accuracy estimate (max-norm): endpoint-doubling change for the
  /// boundary-value part, error-amplification estimate for forward recursion.
  double est_accuracy = 0.0;

  int n_max() const noexcept { return static_cast<int>(values.size()) - 1; }
  /// M(n) with the symmetry M(-n) = M(n).
  cplx operator[](int n) const { return values.at(static_cast<std::size_t>(n < 0 ? -n : n)); }
  int count(Regime r) const;
};

/// Right-hand side of row n for an inhomogeneous recurrence; empty means zero.
using RowSource = std::function<cplx(int n)>;

/// Relative residual |sum_j c_j M(n+j) - r_n| / sum_j |c_j M(n+j)| of row n.
double row_residual(const ProblemParams& p, int n, const std::function<cplx(int)>& moment,
                    const RowSource& rhs = {});

enum class RecurrenceForm {
  automatic,   // seven-term when omega == 2k, nine-term otherwise
  nine_term,
  seven_term,  // only valid when omega == 2k
};

/// Number of zero tail values a boundary-value solve needs.
int tail_width(const ProblemParams& p, RecurrenceForm form = RecurrenceForm::automatic);

/// Steps the recurrence upward from the known values M(0..L), L >= 4, to
/// n_target. Requires n_target <= floor(k + omega/2); larger targets throw
/// DomainError. A leading coefficient below 1e-14 of the row scale throws
/// SingularError.
MomentTable forward_recursion(const ProblemParams& p, std::span<const cplx> known, int n_target,
                              const RowSource& rhs = {});

struct BvpOptions {
  double tol = 1e-12;
  /// Endpoint cap is cap_factor * (n_max + k + omega).
  double cap_factor = 16.0;
  /// Largest endpoint allowed by external data (e.g. dependency tables); -1 = none.
  int max_endpoint = -1;
  RecurrenceForm form = RecurrenceForm::automatic;
};

/// Solves for M(L+1..n_max) from the known M(0..L), L >= 4, with zero tail
/// values past a trial endpoint E. E is pushed outward until the requested
/// entries change by less than tol (relative, max-norm).
MomentTable bvp_solve(const ProblemParams& p, std::span<const cplx> known, int n_max,
                      const BvpOptions& opts = {}, const RowSource& rhs = {});

/// Fixed-endpoint solve with caller-supplied tail values M(E+1..E+w),
/// w = tail_width(p, form). Returns M(0..E).
MomentTable fixed_endpoint_solve(const ProblemParams& p, std::span<const cplx> known, int endpoint,
                                 std::span<const cplx> tail, const RowSource& rhs = {},
                                 RecurrenceForm form = RecurrenceForm::automatic);

struct RecurrenceOptions {
  /// Forward recursion runs at most to forward_safety * (k + omega/2).
  double forward_safety = 0.9;
  /// ... and stops earlier when the estimated growth of rounding errors
  /// (product of the dominant root moduli) exceeds this factor.
  double max_amplification = 1e3;
  BvpOptions bvp;
  /// Largest accepted relative residual of the n = 0 row for the starting values.
  double start_residual_tol = 1e-8;
};

/// Highest index (at most n_max) the forward recursion may reach for p. The
/// growth estimate uses the largest root modulus of the frozen-coefficient
/// characteristic polynomial at each step. Returns 4 when forward recursion
/// should not be used at all.
int forward_limit(const ProblemParams& p, int n_max, const RecurrenceOptions& opts = {});

/// Full pipeline from the starting values M(0..4): forward recursion up to
/// forward_limit, boundary-value solve beyond it. The starting values are
/// checked against the n = 0 row of the recurrence (AccuracyError).
MomentTable compute_moments(const ProblemParams& p, const std::array<cplx, 5>& start, int n_max,
                            const RecurrenceOptions& opts = {}, const RowSource& rhs = {});

}  // namespace osci::moments
