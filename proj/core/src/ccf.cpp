#include "osci/ccf.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "osci/error.hpp"

namespace osci::ccf {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Re-tags stage-less failures from lower layers so callers always learn where
// a run failed.
template <class F>
auto staged(Stage stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(stage, e.what());
  }
}

moments::MomentTable timed_moment_table(const ProblemParams& p, int n_max, const MethodConfig& cfg,
                                        bool* starting_from_oracle, StageTimings* timings) {
  auto t0 = Clock::now();
  const startmom::StartingIntegrals si =
      staged(Stage::starting_moments, [&] { return startmom::starting_integrals(p, cfg.start); });
  if (timings != nullptr) timings->starting_ms = ms_since(t0);
  if (starting_from_oracle != nullptr) *starting_from_oracle = si.path == startmom::StartPath::oracle;

  t0 = Clock::now();
  moments::RecurrenceOptions ro;
  ro.forward_safety = cfg.forward_safety;
  ro.bvp.tol = cfg.bvp_tol;
  const auto start = startmom::moments_from_integrals(si.values);
  moments::MomentTable t =
      staged(Stage::recurrence, [&] { return moments::compute_moments(p, start, n_max, ro); });
  t.est_accuracy = std::max(t.est_accuracy, si.est_error);
  if (timings != nullptr) timings->recurrence_ms = ms_since(t0);
  return t;
}

}  // namespace

void MethodConfig::validate() const {
  if (N < 2) throw DomainError(Stage::integration, "N must be at least 2");
  if (s < 0) throw DomainError(Stage::integration, "s must be nonnegative");
  if (!(forward_safety > 0.0 && forward_safety <= 1.0)) {
    throw DomainError(Stage::integration, "forward_safety must lie in (0, 1]");
  }
  if (!(bvp_tol > 0.0)) throw DomainError(Stage::integration, "bvp_tol must be positive");
}

moments::MomentTable moment_table(const ProblemParams& p, int n_max, const MethodConfig& cfg,
                                  bool* starting_from_oracle) {
  return timed_moment_table(p, n_max, cfg, starting_from_oracle, nullptr);
}

cheb::ChebSeries ccf_coefficients(const cheb::Integrand& f, int N, int s) {
  return staged(Stage::interpolation, [&] {
    const cheb::ChebSeries base = cheb::interp_coeffs(f, N);
    return cheb::hermite_correct(base, f, N, s);
  });
}

cplx ccf_sum(const cheb::ChebSeries& a, const moments::MomentTable& m) {
  if (a.degree() > m.n_max()) {
    throw DomainError(Stage::integration, "moment table shorter than the interpolant degree");
  }
  cplx acc{0.0, 0.0};
  for (int n = 0; n <= a.degree(); ++n) acc += a.coeffs[n] * m.values[n];
  return acc;
}

QuadResult ccf_integrate(const cheb::Integrand& f, const moments::MomentTable& m,
                         const MethodConfig& cfg) {
  cfg.validate();
  QuadResult r;
  auto t0 = Clock::now();
  const cheb::ChebSeries a = ccf_coefficients(f, cfg.N, cfg.s);
  r.timings.interpolation_ms = ms_since(t0);

  t0 = Clock::now();
  r.value = ccf_sum(a, m);
  r.timings.summation_ms = ms_since(t0);
  if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag())) {
    throw OverflowError(Stage::integration, "quadrature value is not finite");
  }

  const int deg = a.degree();
  cplx tail{0.0, 0.0};
  double mass = 0.0;
  double mmax = 0.0;
  for (int n = 0; n <= deg; ++n) {
    if (n > deg - 3) tail += a.coeffs[n] * m.values[n];
    mass += std::abs(a.coeffs[n]);
    mmax = std::max(mmax, std::abs(m.values[n]));
  }
  r.est_error = std::abs(tail) + m.est_accuracy * mass * mmax;
  for (int n = 0; n <= deg; ++n) {
    switch (m.regime[n]) {
      case moments::Regime::starting: ++r.n_moments_starting; break;
      case moments::Regime::forward: ++r.n_moments_forward; break;
      case moments::Regime::bvp: ++r.n_moments_bvp; break;
    }
  }
  return r;
}

QuadResult ccf_integrate(const cheb::Integrand& f, const ProblemParams& p, const MethodConfig& cfg) {
  cfg.validate();
  const int n_max = cfg.N + 2 * cfg.s;
  bool from_oracle = false;
  StageTimings moment_timings;
  const moments::MomentTable m =
      timed_moment_table(p, std::max(n_max, 4), cfg, &from_oracle, &moment_timings);
  QuadResult r = ccf_integrate(f, m, cfg);
  r.starting_from_oracle = from_oracle;
  r.timings.starting_ms = moment_timings.starting_ms;
  r.timings.recurrence_ms = moment_timings.recurrence_ms;
  return r;
}

std::vector<ConvergenceCell> convergence_table(const cheb::Integrand& f, const ProblemParams& p,
                                               const std::vector<int>& Ns, const std::vector<int>& ss,
                                               cplx reference, const MethodConfig& base) {
  if (!(std::abs(reference) > 0.0) || !std::isfinite(std::abs(reference))) {
    throw DomainError(Stage::integration, "reference value must be finite and nonzero");
  }
  if (Ns.empty() || ss.empty()) return {};
  const int n_max = *std::max_element(Ns.begin(), Ns.end()) + 2 * *std::max_element(ss.begin(), ss.end());
  const moments::MomentTable m = moment_table(p, std::max(n_max, 4), base);
  std::vector<ConvergenceCell> out;
  for (int s : ss) {
    for (int N : Ns) {
      MethodConfig cfg = base;
      cfg.N = N;
      cfg.s = s;
      const QuadResult q = ccf_integrate(f, m, cfg);
      out.push_back({s, N, q.value, std::abs(q.value - reference) / std::abs(reference)});
    }
  }
  return out;
}

}  // namespace osci::ccf
