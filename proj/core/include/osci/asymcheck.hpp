#pragma once

// Scaled-magnitude and scaled-error sweeps: |I| or |I - Q_{N,s}| multiplied by
// x^exponent (optionally divided by 1 + ln x) as one frequency runs over a
// range. A bounded series confirms the asymptotic order.

#include <vector>

#include "osci/ccf.hpp"
#include "osci/cheb.hpp"

namespace osci::asymcheck {

enum class SweepVariable { omega, k, omega_eq_2k };
enum class Quantity { integral_magnitude, ccf_error };

struct Range {
  double lo = 1.0;
  double hi = 1000.0;
  double step = 2.0;
};

struct ScalingSpec {
  SweepVariable variable = SweepVariable::omega;
  double exponent = 0.0;
  Range range;
  /// Fixed parameters; the swept one is ignored (and k = omega/2 for omega_eq_2k).
  double alpha = 0.0;
  double beta = 0.0;
  double nu = 0.0;
  double k = 0.0;
  double omega = 1.0;
  /// Divide by (1 + ln x).
  bool log_factor = false;
};

struct SeriesPoint {
  double x = 0.0;
  double raw = 0.0;
  double scaled = 0.0;
};

double tau1(double alpha, double beta);
double tau2(double alpha, double beta, double nu);

/// Decay order of |I| in the swept variable and whether a (1 + ln x) factor
/// accompanies it.
struct Order {
  double exponent = 0.0;
  bool log_factor = false;
};
Order magnitude_order(SweepVariable v, double alpha, double beta, double nu);
/// Order of |I - Q_{N,s}|: the magnitude order plus s + 1.
Order error_order(SweepVariable v, int s, double alpha, double beta, double nu);

std::vector<double> sweep_points(const Range& r);

/// Parameters at sweep point x.
ProblemParams params_at(const ScalingSpec& spec, double x);

/// integral_magnitude uses the starting integral I(0) (f = 1). ccf_error
/// compares Q_{N,s}[f] against Q_{N+12,s+2}[f]. Points are evaluated in
/// parallel on `threads` workers (0 = hardware concurrency); the output order
/// and values do not depend on the thread count.
std::vector<SeriesPoint> scaled_series(const ScalingSpec& spec, Quantity quantity,
                                       const cheb::Integrand& f = cheb::Integrand{nullptr},
                                       const ccf::MethodConfig& method = {}, int threads = 0);

/// max / min of the scaled values over points [first, end).
double max_over_min(const std::vector<SeriesPoint>& series, std::size_t first = 0);

/// Mean of the scaled values over the last m points minus over the first m,
/// m = max(3, n / 10); positive means the series trends upward.
double trend(const std::vector<SeriesPoint>& series);

/// Multiplies every scaled value by x^extra.
std::vector<SeriesPoint> rescale(std::vector<SeriesPoint> series, double extra);

}  // namespace osci::asymcheck
