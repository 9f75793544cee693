#pragma once

// Clenshaw-Curtis interpolation in the shifted Chebyshev basis
// T*_n(x) = T_n(2x - 1) on [0, 1], with Hermite endpoint corrections.

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace osci::cheb {

using cplx = std::complex<double>;

/// Clenshaw-Curtis points x_j = (1 + cos(j pi / N)) / 2, j = 0..N (descending).
struct NodeSet {
  int N = 0;
  std::vector<double> nodes;
};

NodeSet cc_nodes(int N);

/// Coefficients a_0..a_M of sum_n a_n T*_n(x).
struct ChebSeries {
  std::vector<cplx> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

/// A function on [0, 1] plus a way to obtain f^(l)(0) and f^(l)(1).
///
/// When no derivative callback is given, endpoint derivatives come from
/// one-sided finite differences on a uniform stencil inside [0, 1]. Their
/// accuracy degrades with the derivative order (roughly 1e-10 for l = 1 down
/// to 1e-5 for l = 3 on well-scaled functions); supply analytic derivatives
/// when s >= 2 matters.
class Integrand {
 public:
  using Value = std::function<cplx(double)>;
  /// (order l >= 1, endpoint 0.0 or 1.0) -> f^(l)(endpoint)
  using EndpointDerivative = std::function<cplx(int, double)>;

  explicit Integrand(Value f);
  Integrand(Value f, EndpointDerivative d);

  cplx operator()(double x) const { return f_(x); }

  /// f^(l)(endpoint) for l >= 0; endpoint must be 0.0 or 1.0.
  cplx derivative(int ell, double endpoint) const;

  bool has_analytic_derivatives() const noexcept { return static_cast<bool>(d_); }

 private:
  Value f_;
  EndpointDerivative d_;
};

/// Chebyshev coefficients of the degree-N interpolant at cc_nodes(N), by a
/// type-I DCT (FFTW). Thread-safe.
ChebSeries interp_coeffs(const Integrand& f, int N);

/// Same as interp_coeffs, from samples f(x_j), j = 0..N.
ChebSeries interp_coeffs_from_samples(std::span<const cplx> samples);

/// O(N^2) cosine sum; reference for interp_coeffs.
ChebSeries interp_coeffs_direct(std::span<const cplx> samples);

/// Degree N+2s series that interpolates f at cc_nodes(N) and matches
/// f^(l)(0), f^(l)(1) for l = 1..s.
ChebSeries hermite_correct(const ChebSeries& base, const Integrand& f, int N, int s);

/// As above with endpoint derivatives given explicitly: at0[l-1] = f^(l)(0),
/// at1[l-1] = f^(l)(1), l = 1..s.
ChebSeries hermite_correct(const ChebSeries& base, int N, std::span<const cplx> at0,
                           std::span<const cplx> at1);

/// Clenshaw evaluation at x in [0, 1].
cplx cheb_eval(const ChebSeries& series, double x);

/// (P^(l)(0), P^(l)(1)).
std::pair<cplx, cplx> cheb_derivative_at_endpoints(const ChebSeries& series, int ell);

/// d^l/dx^l T*_n at x = 1; the value at x = 0 is (-1)^(n+l) times this.
double shifted_chebyshev_derivative_at_one(int n, int ell);

}  // namespace osci::cheb
