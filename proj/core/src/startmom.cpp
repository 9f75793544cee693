#include "osci/startmom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "osci/error.hpp"
#include "osci/specfun.hpp"

namespace osci::startmom {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
constexpr int kPanelPoints = 20;
constexpr int kInnerPoints = 10;
constexpr double kGradingRatio = 0.25;
constexpr double kGradingTarget = 1e-17;

cplx expi(double phase) { return {std::cos(phase), std::sin(phase)}; }

}  // namespace

ContourRule gauss_laguerre_general(double gamma, int n) { return quad::gauss_laguerre(gamma, n); }

std::array<cplx, 5> contour_l0(const ProblemParams& p) {
  const double alpha = p.alpha();
  const double beta = p.beta();
  const double nu_abs = p.nu().abs();
  const double k = p.k();
  const double omega = p.omega();
  const double c = 2.0 * k + omega;

  auto g = [&](double s) {
    return std::pow(cplx{1.0, -s}, beta) * specfun::bessel_k(p.nu(), omega * s) *
           std::exp(-2.0 * k * s);
  };

  std::array<cplx, 5> acc{};
  const auto gl = quad::cached_gauss_legendre(kPanelPoints);
  auto add_panel = [&](double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    for (int i = 0; i < kPanelPoints; ++i) {
      const double s = lo + half * (1.0 + gl->nodes[i]);
      const cplx v = gl->weights[i] * half * g(s) * std::pow(s, alpha);
      double sj = 1.0;
      for (int j = 0; j < 5; ++j) {
        acc[j] += v * sj;
        sj *= s;
      }
    }
  };

  // Decay region: the integrand falls like e^{-cs}.
  const double s1 = 1.0 / c;
  const double s_max = (50.0 + 3.0 * std::max(0.0, alpha + 4.0)) / c;
  const int n_upper = static_cast<int>(std::ceil((s_max - s1) * c / 4.0));
  for (int i = 0; i < n_upper; ++i) {
    add_panel(s1 + (s_max - s1) * i / n_upper, s1 + (s_max - s1) * (i + 1) / n_upper);
  }

  // Graded toward the singular end.
  const double e0 = alpha - nu_abs + 1.0;
  const int lp = nu_abs == 0.0 ? 1 : 0;
  double a = s1;
  while (a > 1e-300) {
    const double share = std::pow(a * c, e0) * std::pow(1.0 + std::abs(std::log(a * c)), lp);
    if (share <= kGradingTarget) break;
    add_panel(a * kGradingRatio, a);
    a *= kGradingRatio;
  }

  // Innermost panel with the algebraic part of the singularity in the weight.
  for (int j = 0; j < 5; ++j) {
    const double power = alpha + j - nu_abs;
    const quad::Rule rule = quad::left_weighted_unit_rule(power, kInnerPoints);
    cplx inner{0.0, 0.0};
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double s = a * rule.nodes[i];
      inner += rule.weights[i] * g(s) * std::pow(s, nu_abs);
    }
    acc[j] += inner * std::pow(a, power + 1.0);
  }

  std::array<cplx, 5> out{};
  for (int j = 0; j < 5; ++j) {
    const cplx pref = 2.0 * expi(kPi * (alpha + j) / 2.0) / (expi(kPi * p.nu().value() / 2.0) * kPi);
    out[j] = pref * acc[j];
  }
  return out;
}

std::array<cplx, 5> contour_l1(const ProblemParams& p, int n) {
  const double alpha = p.alpha();
  const double beta = p.beta();
  const double omega = p.omega();
  const double c = 2.0 * p.k() + omega;
  const auto rule = quad::cached_gauss_laguerre(beta, n);
  std::array<cplx, 5> acc{};
  for (std::size_t i = 0; i < rule->size(); ++i) {
    const double t = rule->nodes[i];
    const cplx base{1.0, t / c};
    // h_nu(z) e^{i omega} equals H_nu(z) e^{omega t / c}; the growing and
    // decaying exponentials never appear separately.
    const cplx h = specfun::hankel1_scaled(p.nu(), omega * base);
    cplx v = rule->weights[i] * std::pow(base, alpha) * h;
    for (int j = 0; j < 5; ++j) {
      acc[j] += v;
      v *= base;
    }
  }
  const cplx pref = expi(-kPi * beta / 2.0) * kI * expi(c) / std::pow(c, 1.0 + beta);
  std::array<cplx, 5> out{};
  for (int j = 0; j < 5; ++j) out[j] = pref * acc[j];
  return out;
}

StartingIntegrals starting_integrals(const ProblemParams& p, const StartOptions& opts) {
  StartingIntegrals out;
  if (p.omega() >= std::max(opts.omega_min, 1.0)) {
    try {
      const std::array<cplx, 5> l0 = contour_l0(p);
      int n = std::max(1, opts.laguerre_points);
      std::array<cplx, 5> prev = contour_l1(p, n);
      while (2 * n <= opts.max_laguerre_points) {
        n *= 2;
        const std::array<cplx, 5> cur = contour_l1(p, n);
        double worst = 0.0;
        for (int j = 0; j < 5; ++j) {
          worst = std::max(worst, std::abs(cur[j] - prev[j]) / std::abs(l0[j] - cur[j]));
        }
        if (worst <= opts.agreement_tol) {
          for (int j = 0; j < 5; ++j) out.values[j] = l0[j] - cur[j];
          out.path = StartPath::contour;
          out.est_error = worst;
          out.laguerre_points = n;
          return out;
        }
        prev = cur;
      }
    } catch (const Error&) {
      if (!opts.oracle_fallback) throw;
    }
  }
  if (!opts.oracle_fallback) {
    throw AccuracyError(Stage::starting_moments,
                        "contour quadrature for the starting integrals did not reach the requested "
                        "agreement and the oracle fallback is disabled");
  }
  for (int j = 0; j < 5; ++j) {
    try {
      out.values[j] = oracle::reference_integral(
          [j](double x) { return cplx{std::pow(x, j), 0.0}; }, p, opts.oracle);
    } catch (const Error& e) {
      throw AccuracyError(Stage::starting_moments,
                          std::string("oracle fallback for starting integrals failed: ") + e.what());
    }
  }
  out.path = StartPath::oracle;
  out.est_error = opts.oracle.rel_tol;
  return out;
}

cplx starting_integral(const ProblemParams& p, int j, const StartOptions& opts) {
  if (j < 0 || j > 4) throw DomainError(Stage::starting_moments, "starting integral index must be 0..4");
  return starting_integrals(p, opts).values[j];
}

std::array<cplx, 5> moments_from_integrals(const std::array<cplx, 5>& I) {
  return {I[0],
          2.0 * I[1] - I[0],
          8.0 * I[2] - 8.0 * I[1] + I[0],
          32.0 * I[3] - 48.0 * I[2] + 18.0 * I[1] - I[0],
          128.0 * I[4] - 256.0 * I[3] + 160.0 * I[2] - 32.0 * I[1] + I[0]};
}

std::array<cplx, 5> starting_moments(const ProblemParams& p, const StartOptions& opts) {
  return moments_from_integrals(starting_integrals(p, opts).values);
}

}  // namespace osci::startmom
