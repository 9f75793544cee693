#include "osci/asymcheck.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "osci/error.hpp"
#include "osci/startmom.hpp"

namespace osci::asymcheck {

double tau1(double alpha, double beta) { return std::min(alpha, beta); }

double tau2(double alpha, double beta, double nu) { return std::min(alpha - std::abs(nu), beta); }

Order magnitude_order(SweepVariable v, double alpha, double beta, double nu) {
  switch (v) {
    case SweepVariable::omega:
    case SweepVariable::omega_eq_2k:
      return {1.0 + tau1(alpha, beta), false};
    case SweepVariable::k:
      if (nu != 0.0) return {1.0 + tau2(alpha, beta, nu), false};
      if (alpha <= beta) return {1.0 + alpha, true};
      return {1.0 + beta, false};
  }
  return {};
}

Order error_order(SweepVariable v, int s, double alpha, double beta, double nu) {
  Order o = magnitude_order(v, alpha, beta, nu);
  o.exponent += s + 1.0;
  return o;
}

std::vector<double> sweep_points(const Range& r) {
  if (!(r.lo >= 1.0) || !(r.hi >= r.lo) || !(r.step > 0.0)) {
    throw DomainError(Stage::sweep, "sweep range needs 1 <= lo <= hi and step > 0");
  }
  std::vector<double> xs;
  const auto count = static_cast<long>(std::floor((r.hi - r.lo) / r.step + 1e-9));
  for (long i = 0; i <= count; ++i) xs.push_back(r.lo + i * r.step);
  return xs;
}

ProblemParams params_at(const ScalingSpec& spec, double x) {
  switch (spec.variable) {
    case SweepVariable::omega: return {spec.alpha, spec.beta, spec.nu, spec.k, x};
    case SweepVariable::k: return {spec.alpha, spec.beta, spec.nu, x, spec.omega};
    case SweepVariable::omega_eq_2k: return {spec.alpha, spec.beta, spec.nu, 0.5 * x, x};
  }
  throw DomainError(Stage::sweep, "unknown sweep variable");
}

std::vector<SeriesPoint> scaled_series(const ScalingSpec& spec, Quantity quantity,
                                       const cheb::Integrand& f, const ccf::MethodConfig& method,
                                       int threads) {
  const std::vector<double> xs = sweep_points(spec.range);
  if (quantity == Quantity::ccf_error) method.validate();
  std::vector<SeriesPoint> out(xs.size());

  auto evaluate = [&](std::size_t i) {
    const double x = xs[i];
    const ProblemParams p = params_at(spec, x);
    double raw = 0.0;
    if (quantity == Quantity::integral_magnitude) {
      raw = std::abs(startmom::starting_integral(p, 0, method.start));
    } else {
      ccf::MethodConfig ref = method;
      ref.N += 12;
      ref.s += 2;
      const int n_max = ref.N + 2 * ref.s;
      const moments::MomentTable m = ccf::moment_table(p, n_max, method);
      const std::complex<double> q = ccf::ccf_integrate(f, m, method).value;
      const std::complex<double> q_ref = ccf::ccf_integrate(f, m, ref).value;
      raw = std::abs(q - q_ref);
    }
    double scaled = raw * std::pow(x, spec.exponent);
    if (spec.log_factor) scaled /= 1.0 + std::log(x);
    out[i] = {x, raw, scaled};
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(threads > 0 ? static_cast<std::size_t>(threads) : hw, xs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= xs.size()) return;
      try {
        evaluate(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = xs.size();
        return;
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const Error& e) {
      throw Error(e.stage(), std::string("sweep: ") + e.what());
    }
  }
  return out;
}

double max_over_min(const std::vector<SeriesPoint>& series, std::size_t first) {
  if (first >= series.size()) throw DomainError(Stage::sweep, "empty series window");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = first; i < series.size(); ++i) {
    lo = std::min(lo, series[i].scaled);
    hi = std::max(hi, series[i].scaled);
  }
  return lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
}

double trend(const std::vector<SeriesPoint>& series) {
  const std::size_t n = series.size();
  const std::size_t m = std::max<std::size_t>(3, n / 10);
  if (n < 2 * m) throw DomainError(Stage::sweep, "series too short for a trend estimate");
  double first = 0.0;
  double last = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    first += series[i].scaled;
    last += series[n - 1 - i].scaled;
  }
  return (last - first) / m;
}

std::vector<SeriesPoint> rescale(std::vector<SeriesPoint> series, double extra) {
  for (auto& pt : series) pt.scaled *= std::pow(pt.x, extra);
  return series;
}

}  // namespace osci::asymcheck
