#include "osci/cheb.hpp"

#include <fftw3.h>

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "osci/error.hpp"

namespace osci::cheb {
namespace {

constexpr int kFdAccuracyOrder = 8;

// Fornberg's finite-difference weights for the derivative of order m at z
// from function values at xs.
std::vector<double> fornberg_weights(double z, const std::vector<double>& xs, int m) {
  const int n = static_cast<int>(xs.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = xs[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][m];
  return w;
}

cplx finite_difference(const Integrand::Value& f, int ell, double endpoint) {
  const int npts = ell + kFdAccuracyOrder;
  const double h = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / npts);
  const double dir = endpoint == 0.0 ? 1.0 : -1.0;
  std::vector<double> xs(npts);
  for (int i = 0; i < npts; ++i) xs[i] = endpoint + dir * i * h;
  xs[0] = endpoint;
  const std::vector<double> w = fornberg_weights(endpoint, xs, ell);
  cplx acc{0.0, 0.0};
  for (int i = 0; i < npts; ++i) acc += w[i] * f(xs[i]);
  return acc;
}

void require_nodes(int N) {
  if (N < 2) throw DomainError(Stage::interpolation, "Clenshaw-Curtis rule needs N >= 2");
}

// FFTW plans for REDFT00 of length N+1 applied to the real and imaginary
// parts of interleaved complex data. Planning is serialized; execution via
// the new-array interface is thread-safe.
class DctPlans {
 public:
  ~DctPlans() {
    for (auto& [n, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int N) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(N); it != plans_.end()) return it->second;
    const int len = N + 1;
    double* in = fftw_alloc_real(2 * len);
    double* out = fftw_alloc_real(2 * len);
    fftw_r2r_kind kind = FFTW_REDFT00;
    fftw_plan plan = fftw_plan_many_r2r(1, &len, 2, in, nullptr, 2, 1, out, nullptr, 2, 1, &kind,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    if (plan == nullptr) throw Error(Stage::interpolation, "FFTW could not plan a DCT-I");
    plans_.emplace(N, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<int, fftw_plan> plans_;
};

DctPlans& dct_plans() {
  static DctPlans plans;
  return plans;
}

void check_finite(std::span<const cplx> samples) {
  for (std::size_t j = 0; j < samples.size(); ++j) {
    if (!std::isfinite(samples[j].real()) || !std::isfinite(samples[j].imag())) {
      throw DomainError(Stage::interpolation,
                        "integrand not finite at node " + std::to_string(j));
    }
  }
}

}  // namespace

NodeSet cc_nodes(int N) {
  require_nodes(N);
  NodeSet ns;
  ns.N = N;
  ns.nodes.resize(N + 1);
  for (int j = 0; j <= N; ++j) {
    ns.nodes[j] = 0.5 * (1.0 + std::cos(j * std::numbers::pi / N));
  }
  // Symmetrize so that x_j + x_{N-j} = 1 holds exactly in floating point.
  for (int j = 0; j < N - j; ++j) ns.nodes[N - j] = 1.0 - ns.nodes[j];
  if (N % 2 == 0) ns.nodes[N / 2] = 0.5;
  ns.nodes[0] = 1.0;
  ns.nodes[N] = 0.0;
  return ns;
}

Integrand::Integrand(Value f) : f_(std::move(f)) {}

Integrand::Integrand(Value f, EndpointDerivative d) : f_(std::move(f)), d_(std::move(d)) {}

cplx Integrand::derivative(int ell, double endpoint) const {
  if (endpoint != 0.0 && endpoint != 1.0) {
    throw DomainError(Stage::interpolation, "endpoint derivative requested away from 0 or 1");
  }
  if (ell < 0) throw DomainError(Stage::interpolation, "negative derivative order");
  if (ell == 0) return f_(endpoint);
  if (d_) return d_(ell, endpoint);
  return finite_difference(f_, ell, endpoint);
}

ChebSeries interp_coeffs_from_samples(std::span<const cplx> samples) {
  const int N = static_cast<int>(samples.size()) - 1;
  require_nodes(N);
  check_finite(samples);
  ChebSeries out;
  out.coeffs.resize(N + 1);
  fftw_plan plan = dct_plans().get(N);
  // std::complex<double> is layout-compatible with double[2].
  fftw_execute_r2r(plan, const_cast<double*>(reinterpret_cast<const double*>(samples.data())),
                   reinterpret_cast<double*>(out.coeffs.data()));
  const double scale = 1.0 / N;
  for (auto& c : out.coeffs) c *= scale;
  out.coeffs.front() *= 0.5;
  out.coeffs.back() *= 0.5;
  return out;
}

ChebSeries interp_coeffs(const Integrand& f, int N) {
  const NodeSet ns = cc_nodes(N);
  std::vector<cplx> samples(N + 1);
  for (int j = 0; j <= N; ++j) samples[j] = f(ns.nodes[j]);
  return interp_coeffs_from_samples(samples);
}

ChebSeries interp_coeffs_direct(std::span<const cplx> samples) {
  const int N = static_cast<int>(samples.size()) - 1;
  require_nodes(N);
  check_finite(samples);
  ChebSeries out;
  out.coeffs.assign(N + 1, cplx{0.0, 0.0});
  for (int n = 0; n <= N; ++n) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j <= N; ++j) {
      const double w = (j == 0 || j == N) ? 0.5 : 1.0;
      // Reduce jn mod 2N before the cosine to keep the argument small.
      const long long r = (static_cast<long long>(j) * n) % (2LL * N);
      acc += w * samples[j] * std::cos(r * std::numbers::pi / N);
    }
    out.coeffs[n] = 2.0 / N * acc;
  }
  out.coeffs.front() *= 0.5;
  out.coeffs.back() *= 0.5;
  return out;
}

double shifted_chebyshev_derivative_at_one(int n, int ell) {
  double v = 1.0;
  const double n2 = static_cast<double>(n) * n;
  for (int m = 0; m < ell; ++m) v *= 2.0 * (n2 - static_cast<double>(m) * m) / (2.0 * m + 1.0);
  return v;
}

std::pair<cplx, cplx> cheb_derivative_at_endpoints(const ChebSeries& series, int ell) {
  if (ell < 0) throw DomainError(Stage::interpolation, "negative derivative order");
  cplx at0{0.0, 0.0};
  cplx at1{0.0, 0.0};
  for (int n = 0; n <= series.degree(); ++n) {
    const double d = shifted_chebyshev_derivative_at_one(n, ell);
    at1 += series.coeffs[n] * d;
    at0 += ((n + ell) % 2 == 0 ? d : -d) * series.coeffs[n];
  }
  return {at0, at1};
}

ChebSeries hermite_correct(const ChebSeries& base, const Integrand& f, int N, int s) {
  std::vector<cplx> at0(s), at1(s);
  for (int ell = 1; ell <= s; ++ell) {
    at0[ell - 1] = f.derivative(ell, 0.0);
    at1[ell - 1] = f.derivative(ell, 1.0);
  }
  return hermite_correct(base, N, at0, at1);
}

ChebSeries hermite_correct(const ChebSeries& base, int N, std::span<const cplx> at0,
                           std::span<const cplx> at1) {
  require_nodes(N);
  const int s = static_cast<int>(at0.size());
  if (s < 0 || at1.size() != at0.size()) {
    throw DomainError(Stage::interpolation, "endpoint derivative lists differ in length");
  }
  if (base.degree() > N) throw DomainError(Stage::interpolation, "base series exceeds degree N");
  if (s == 0) return base;

  // omega_N = T*_{N+1} - T*_{N-1} vanishes at every node. The correction is
  // omega_N * q with q = sum_{m<2s} q_m T*_m, and omega_N T*_m expands as
  // (T*_{N+1+m} + T*_{|N+1-m|} - T*_{N-1+m} - T*_{|N-1-m|}) / 2.
  const int nq = 2 * s;
  auto product_terms = [N](int m) {
    return std::array<std::pair<int, double>, 4>{{{N + 1 + m, 0.5},
                                                 {std::abs(N + 1 - m), 0.5},
                                                 {N - 1 + m, -0.5},
                                                 {std::abs(N - 1 - m), -0.5}}};
  };

  Eigen::MatrixXcd A(nq, nq);
  Eigen::VectorXcd rhs(nq);
  for (int ell = 1; ell <= s; ++ell) {
    const auto [b0, b1] = cheb_derivative_at_endpoints(base, ell);
    const int r0 = 2 * (ell - 1);
    const int r1 = r0 + 1;
    rhs[r0] = at0[ell - 1] - b0;
    rhs[r1] = at1[ell - 1] - b1;
    for (int m = 0; m < nq; ++m) {
      double d0 = 0.0;
      double d1 = 0.0;
      for (const auto& [n, c] : product_terms(m)) {
        const double d = shifted_chebyshev_derivative_at_one(n, ell);
        d1 += c * d;
        d0 += c * ((n + ell) % 2 == 0 ? d : -d);
      }
      A(r0, m) = d0;
      A(r1, m) = d1;
    }
    // Row equilibration; derivative rows grow like N^(2l).
    const double scale = 1.0 / A.row(r1).cwiseAbs().maxCoeff();
    A.row(r0) *= scale;
    A.row(r1) *= scale;
    rhs[r0] *= scale;
    rhs[r1] *= scale;
  }

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
  if (lu.rank() < nq) {
    throw SingularError(Stage::interpolation, "Hermite correction system is singular");
  }
  const Eigen::VectorXcd q = lu.solve(rhs);

  ChebSeries out;
  out.coeffs.assign(N + 2 * s + 1, cplx{0.0, 0.0});
  for (int n = 0; n <= base.degree(); ++n) out.coeffs[n] = base.coeffs[n];
  for (int m = 0; m < nq; ++m) {
    for (const auto& [n, c] : product_terms(m)) out.coeffs[n] += c * q[m];
  }
  return out;
}

cplx cheb_eval(const ChebSeries& series, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError(Stage::interpolation, "cheb_eval: x outside [0, 1]");
  const double t = 2.0 * x - 1.0;
  cplx b1{0.0, 0.0};
  cplx b2{0.0, 0.0};
  for (int n = series.degree(); n >= 1; --n) {
    const cplx b0 = series.coeffs[n] + 2.0 * t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  if (series.coeffs.empty()) return {0.0, 0.0};
  return series.coeffs[0] + t * b1 - b2;
}

}  // namespace osci::cheb
