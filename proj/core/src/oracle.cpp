#include "osci/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "osci/error.hpp"
#include "osci/quadrature_rules.hpp"

namespace osci::oracle {
namespace {

constexpr double kGradingTarget = 1e-17;
constexpr double kSmallest = 1e-300;
constexpr double kSubRatio = 0.35;

enum class PanelKind { legendre, left_jacobi, right_jacobi };

// Panels near x = 1 are stored in y = 1 - x so that 1 - x is exact.
struct Panel {
  double lo;
  double hi;
  PanelKind kind;
  bool in_y;
};

void require_config(const OracleConfig& cfg) {
  if (cfg.panels_per_wavelength < 1 || cfg.points_per_panel < 1 || !(cfg.grading_ratio > 0.0) ||
      !(cfg.grading_ratio < 1.0) || !(cfg.abs_floor >= 0.0) || !(cfg.rel_tol > 0.0)) {
    throw DomainError(Stage::oracle, "invalid oracle configuration");
  }
}

// Geometric panels [h r^{m+1}, h r^m] until the remaining [0, a] would carry a
// relative share below the target, assuming the integrand behaves like
// t^{e-1} |ln t|^lp near the end.
double grade(std::vector<Panel>& panels, double h, double r, double e, int lp, bool in_y) {
  double a = h;
  while (a > kSmallest) {
    const double share = std::pow(a / h, e) * std::pow(1.0 + std::abs(std::log(a)), lp);
    if (share <= kGradingTarget) break;
    // A single Gauss panel [ra, a] converges like rho^{-2n} with rho set by
    // r; at r = 0.15 that is only 0.2 per point, so each level is split into
    // geometric sub-panels of ratio at least kSubRatio.
    const int sub = std::max(1, static_cast<int>(std::ceil(std::log(r) / std::log(kSubRatio))));
    const double q = std::pow(r, 1.0 / sub);
    double hi = a;
    for (int i = 0; i < sub; ++i) {
      const double lo = (i + 1 == sub) ? a * r : hi * q;
      panels.push_back({lo, hi, PanelKind::legendre, in_y});
      hi = lo;
    }
    a *= r;
  }
  return a;
}

}  // namespace

cplx reference_integral(const std::function<cplx(double)>& g, const ProblemParams& p,
                        const OracleConfig& cfg, const WeightOptions& w) {
  require_config(cfg);
  if (p.k() + p.omega() > cfg.frequency_cap && cfg.warn) {
    cfg.warn("oracle: k + omega = " + std::to_string(p.k() + p.omega()) +
             " exceeds the tractability cap; expect long runtimes");
  }
  const double alpha = p.alpha();
  const double beta = p.beta();
  const double nu_abs = p.nu().abs();
  const double freq = 2.0 * p.k() + p.omega() + w.g_frequency;
  const double h = std::min(0.125, std::numbers::pi / (cfg.panels_per_wavelength * freq));
  const double r = cfg.grading_ratio;

  std::vector<Panel> panels;
  {
    const double e = alpha + 1.0 - (w.bypass_kernel ? 0.0 : nu_abs);
    const int lp = (!w.bypass_kernel && nu_abs == 0.0 ? 1 : 0) + (w.log_x ? 1 : 0);
    const double a = grade(panels, h, r, e, lp, false);
    panels.push_back({0.0, a, PanelKind::left_jacobi, false});
  }
  {
    double b = h;
    if (beta < 0.0 || w.log_1mx) b = grade(panels, h, r, beta + 1.0, w.log_1mx ? 1 : 0, true);
    panels.push_back({0.0, b, PanelKind::right_jacobi, true});
  }
  {
    const double span = 1.0 - 2.0 * h;
    const int count = std::max(1, static_cast<int>(std::ceil(span / h)));
    const double width = span / count;
    for (int i = 0; i < count; ++i) {
      const double lo = h + i * width;
      const double hi = (i + 1 == count) ? 1.0 - h : h + (i + 1) * width;
      panels.push_back({lo, hi, PanelKind::legendre, false});
    }
  }

  auto integrand = [&](double x, double y, bool with_xa, bool with_yb) {
    cplx v = g(x);
    if (with_xa) v *= std::pow(x, alpha);
    if (with_yb) v *= std::pow(y, beta);
    if (w.log_x) v *= std::log(x);
    if (w.log_1mx) v *= std::log(y);
    if (!w.bypass_kernel) {
      v *= std::exp(cplx{0.0, 2.0 * p.k() * x}) * specfun::hankel1(p.nu(), p.omega() * x);
    }
    return v;
  };

  auto sum = [&](int n) {
    const auto gl = quad::cached_gauss_legendre(n);
    const quad::Rule left = quad::left_weighted_unit_rule(alpha, n);
    const quad::Rule right = quad::left_weighted_unit_rule(beta, n);
    cplx total{0.0, 0.0};
    for (const Panel& pn : panels) {
      cplx acc{0.0, 0.0};
      const double len = pn.hi - pn.lo;
      switch (pn.kind) {
        case PanelKind::legendre:
          for (int i = 0; i < n; ++i) {
            const double t = pn.lo + 0.5 * len * (1.0 + gl->nodes[i]);
            const double x = pn.in_y ? 1.0 - t : t;
            const double y = pn.in_y ? t : 1.0 - t;
            acc += gl->weights[i] * integrand(x, y, true, true);
          }
          acc *= 0.5 * len;
          break;
        case PanelKind::left_jacobi:
          for (int i = 0; i < n; ++i) {
            const double x = len * left.nodes[i];
            acc += left.weights[i] * integrand(x, 1.0 - x, false, true);
          }
          acc *= std::pow(len, alpha + 1.0);
          break;
        case PanelKind::right_jacobi:
          for (int i = 0; i < n; ++i) {
            const double y = len * right.nodes[i];
            acc += right.weights[i] * integrand(1.0 - y, y, true, false);
          }
          acc *= std::pow(len, beta + 1.0);
          break;
      }
      total += acc;
    }
    return total;
  };

  const cplx coarse = sum(cfg.points_per_panel);
  const cplx fine = sum(2 * cfg.points_per_panel);
  if (!std::isfinite(fine.real()) || !std::isfinite(fine.imag())) {
    throw OverflowError(Stage::oracle, "reference integral is not finite");
  }
  const double diff = std::abs(fine - coarse);
  if (diff > cfg.rel_tol * std::abs(fine) + cfg.abs_floor) {
    throw AccuracyError(Stage::oracle, "reference integral: point doubling changed the result by " +
                                           std::to_string(diff / std::abs(fine) * 1e12) + "e-12" + " (relative)");
  }
  return fine;
}

cplx reference_integral(const cheb::Integrand& g, const ProblemParams& p, const OracleConfig& cfg,
                        const WeightOptions& w) {
  return reference_integral([&g](double x) { return g(x); }, p, cfg, w);
}

cplx reference_moment(const ProblemParams& p, int n, const OracleConfig& cfg,
                      const WeightOptions& w) {
  const int an = std::abs(n);
  WeightOptions wn = w;
  wn.g_frequency += 2.0 * an;
  auto tstar = [an](double x) {
    return cplx{std::cos(an * std::acos(std::clamp(2.0 * x - 1.0, -1.0, 1.0))), 0.0};
  };
  return reference_integral(tstar, p, cfg, wn);
}

}  // namespace osci::oracle
