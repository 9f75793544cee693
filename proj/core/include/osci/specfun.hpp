#pragma once

// Real-order Bessel-family functions used by the moment pipeline and the
// reference integrator.
//
// Real-argument J, Y, K and Gamma are thin, error-translating wrappers over
// Boost.Math. The complex-argument Hankel routines are implemented here:
// hankel1_complex is the large-argument asymptotic series with an explicit
// truncation estimate, and hankel1_scaled returns exp(-iz) H_nu^(1)(z) in the
// closed upper-right quadrant, switching to a Laplace-type integral when the
// asymptotic series cannot reach the requested accuracy.
//
// Every function is pure and thread-safe.

#include <complex>

namespace osci::specfun {

using cplx = std::complex<double>;

/// Order of a Bessel-family function. Any finite real value is accepted;
/// the tested range is |nu| <= 10.
class Order {
 public:
  explicit Order(double nu);
  double value() const noexcept { return nu_; }
  double abs() const noexcept { return nu_ < 0 ? -nu_ : nu_; }

 private:
  double nu_;
};

/// J_nu(x), x >= 0 (x = 0 only for nu >= 0 or integer nu).
double bessel_j(Order nu, double x);

/// Y_nu(x), x > 0.
double bessel_y(Order nu, double x);

/// H^(1)_nu(x) = J_nu(x) + i Y_nu(x), x > 0.
cplx hankel1(Order nu, double x);

/// Modified Bessel function of the second kind, x > 0. Accurate down to
/// x ~ 1e-300 (small-argument expansions inside Boost.Math).
double bessel_k(Order nu, double x);

/// Gamma(x) for x > -170 and x not a nonpositive integer.
double gamma_fn(double x);

struct AsymptoticOptions {
  double z_min = 20.0;       // smallest accepted re(z)
  double rel_tol = 1e-12;    // target for the first omitted term
  int max_terms = 30;
};

struct ComplexHankel {
  cplx value;
  /// |first omitted term| / |partial sum|, zero when the series terminates.
  double truncation_estimate = 0.0;
  int terms = 0;
  /// truncation_estimate <= rel_tol.
  bool accurate = false;
};

/// H^(1)_nu(z) from the Hankel large-argument expansion
///   sqrt(2/(pi z)) e^{i(z - nu pi/2 - pi/4)} sum_m i^m a_m(nu) / z^m.
/// Requires im(z) >= 0 and re(z) >= opts.z_min; throws AccuracyError when
/// re(z) < z_min (callers fall back to another evaluation path). When the
/// series cannot meet rel_tol within max_terms, the result is returned with
/// accurate == false.
ComplexHankel hankel1_complex(Order nu, cplx z, const AsymptoticOptions& opts = {});

/// exp(-i z) H^(1)_nu(z) for re(z) >= 0, im(z) >= 0, |z| >= 1.
///
/// The exponential factor is removed analytically, so the result is O(|z|^-1/2)
/// and never overflows even when exp(-iz) H^(1)_nu(z) would be formed from an
/// exponentially small Hankel value and an exponentially large scale factor.
/// Relative accuracy is about 1e-14 over the whole domain.
cplx hankel1_scaled(Order nu, cplx z);

}  // namespace osci::specfun
