#include "osci/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "osci/error.hpp"
#include "osci/quadrature_rules.hpp"

namespace osci::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

template <class F>
double guarded(const char* name, F&& f) {
  double v;
  try {
    v = f();
  } catch (const std::domain_error& e) {
    throw DomainError(Stage::specfun, std::string(name) + ": " + e.what());
  } catch (const std::overflow_error& e) {
    throw OverflowError(Stage::specfun, std::string(name) + ": " + e.what());
  } catch (const std::underflow_error&) {
    return 0.0;
  } catch (const boost::math::evaluation_error& e) {
    throw AccuracyError(Stage::specfun, std::string(name) + ": " + e.what());
  }
  if (!std::isfinite(v)) {
    throw OverflowError(Stage::specfun, std::string(name) + ": result not finite");
  }
  return v;
}

void require_positive(const char* name, double x) {
  if (!(x > 0.0)) throw DomainError(Stage::specfun, std::string(name) + ": argument must be > 0");
}

// Partial sum of the Hankel asymptotic series sum_m i^m a_m(nu) / z^m.
struct SeriesSum {
  cplx value{1.0, 0.0};
  double estimate = 0.0;
  int terms = 1;
  bool converged = false;
};

SeriesSum hankel_series(double nu, cplx z, double rel_tol, int max_terms) {
  SeriesSum s;
  const double mu = 4.0 * nu * nu;
  cplx term{1.0, 0.0};
  double prev_mag = 1.0;
  for (int m = 1; m <= max_terms; ++m) {
    const double odd = 2.0 * m - 1.0;
    term *= kI * (mu - odd * odd) / (8.0 * m * z);
    const double mag = std::abs(term);
    const double sum_mag = std::abs(s.value);
    if (mag == 0.0) {
      s.estimate = 0.0;
      s.converged = true;
      return s;
    }
    if (mag <= rel_tol * sum_mag) {
      s.estimate = mag / sum_mag;
      s.converged = true;
      return s;
    }
    if (m > 1 && mag > prev_mag) {
      // The series has started to diverge; the smallest term bounds the error.
      s.estimate = prev_mag / sum_mag;
      return s;
    }
    s.value += term;
    s.terms = m + 1;
    prev_mag = mag;
  }
  s.estimate = prev_mag / std::abs(s.value);
  return s;
}

// Laplace-type representation, valid for re(nu) > -1/2 and z off the negative imaginary axis:
//   e^{-iz} H_nu(z) = sqrt(2/(pi z)) e^{-i(nu pi/2 + pi/4)} / Gamma(nu + 1/2)
//                     * int_0^inf e^{-u} u^{nu-1/2} (1 + iu/(2z))^{nu-1/2} du
cplx scaled_hankel_laplace(double nu, cplx z) {
  constexpr int kPoints = 64;
  const auto rule = quad::cached_gauss_laguerre(nu - 0.5, kPoints);
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < rule->size(); ++i) {
    acc += rule->weights[i] * std::pow(1.0 + kI * rule->nodes[i] / (2.0 * z), nu - 0.5);
  }
  const cplx phase = std::exp(-kI * (nu * kPi / 2.0 + kPi / 4.0));
  return std::sqrt(2.0 / (kPi * z)) * phase * acc / std::tgamma(nu + 0.5);
}

}  // namespace

Order::Order(double nu) : nu_(nu) {
  if (!std::isfinite(nu)) throw DomainError(Stage::specfun, "Bessel order must be finite");
}

double bessel_j(Order nu, double x) {
  if (x < 0.0 || std::isnan(x)) throw DomainError(Stage::specfun, "bessel_j: argument must be >= 0");
  return guarded("bessel_j", [&] { return boost::math::cyl_bessel_j(nu.value(), x); });
}

double bessel_y(Order nu, double x) {
  require_positive("bessel_y", x);
  return guarded("bessel_y", [&] { return boost::math::cyl_neumann(nu.value(), x); });
}

cplx hankel1(Order nu, double x) {
  require_positive("hankel1", x);
  return {bessel_j(nu, x), bessel_y(nu, x)};
}

double bessel_k(Order nu, double x) {
  require_positive("bessel_k", x);
  // K is even in the order.
  return guarded("bessel_k", [&] { return boost::math::cyl_bessel_k(nu.abs(), x); });
}

double gamma_fn(double x) {
  if (!(x > -170.0)) throw DomainError(Stage::specfun, "gamma_fn: argument must exceed -170");
  if (x <= 0.0 && x == std::floor(x)) {
    throw DomainError(Stage::specfun, "gamma_fn: pole at nonpositive integer");
  }
  return guarded("gamma_fn", [&] { return boost::math::tgamma(x); });
}

ComplexHankel hankel1_complex(Order nu, cplx z, const AsymptoticOptions& opts) {
  if (z.imag() < 0.0) throw DomainError(Stage::specfun, "hankel1_complex: im(z) must be >= 0");
  if (!(z.real() >= opts.z_min)) {
    throw AccuracyError(Stage::specfun, "hankel1_complex: re(z) below the asymptotic threshold");
  }
  const SeriesSum s = hankel_series(nu.value(), z, opts.rel_tol, opts.max_terms);
  const cplx lead =
      std::sqrt(2.0 / (kPi * z)) * std::exp(kI * (z - nu.value() * kPi / 2.0 - kPi / 4.0));
  ComplexHankel out;
  out.value = lead * s.value;
  out.truncation_estimate = s.estimate;
  out.terms = s.terms;
  out.accurate = s.converged && s.estimate <= opts.rel_tol;
  return out;
}

cplx hankel1_scaled(Order nu, cplx z) {
  if (z.real() < 0.0 || z.imag() < 0.0 || std::abs(z) < 1.0) {
    throw DomainError(Stage::specfun, "hankel1_scaled: z outside the first quadrant with |z| >= 1");
  }
  const double a = nu.abs();
  cplx h;
  bool done = false;
  if (std::abs(z) >= 17.0) {
    const SeriesSum s = hankel_series(a, z, 1e-16, 40);
    if (s.converged) {
      h = std::sqrt(2.0 / (kPi * z)) * std::exp(-kI * (a * kPi / 2.0 + kPi / 4.0)) * s.value;
      done = true;
    }
  }
  if (!done) h = scaled_hankel_laplace(a, z);
  if (nu.value() < 0.0) h *= std::exp(kI * kPi * a);
  return h;
}

}  // namespace osci::specfun
