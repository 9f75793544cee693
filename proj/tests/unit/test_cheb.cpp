#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "osci/cheb.hpp"
#include "osci/error.hpp"

using namespace osci;
using cheb::cplx;

namespace {

cheb::Integrand cosine() {
  return cheb::Integrand([](double x) { return cplx{std::cos(x), 0.0}; },
                         [](int l, double e) {
                           const double v[4] = {std::cos(e), -std::sin(e), -std::cos(e), std::sin(e)};
                           return cplx{v[l % 4], 0.0};
                         });
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

TEST(Cheb, NodesSmallCases) {
  const auto n2 = cheb::cc_nodes(2);
  EXPECT_EQ(n2.nodes, (std::vector<double>{1.0, 0.5, 0.0}));
  const auto n4 = cheb::cc_nodes(4);
  EXPECT_NEAR(n4.nodes[1], (2.0 + std::sqrt(2.0)) / 4.0, 1e-16);
  EXPECT_THROW(cheb::cc_nodes(1), DomainError);
}

TEST(Cheb, NodesSymmetricAndDecreasing) {
  for (int N : {2, 3, 7, 64, 1023}) {
    const auto ns = cheb::cc_nodes(N);
    EXPECT_EQ(ns.nodes.front(), 1.0);
    EXPECT_EQ(ns.nodes.back(), 0.0);
    for (int j = 0; j <= N; ++j) {
      EXPECT_EQ(ns.nodes[j] + ns.nodes[N - j], 1.0);
      if (j > 0) EXPECT_LT(ns.nodes[j], ns.nodes[j - 1]);
    }
  }
}

TEST(Cheb, CoefficientsOfBasisFunctions) {
  const auto one = cheb::interp_coeffs(cheb::Integrand([](double) { return cplx{1.0, 0.0}; }), 8);
  EXPECT_NEAR(std::abs(one.coeffs[0] - 1.0), 0.0, 1e-15);
  for (int n = 1; n <= 8; ++n) EXPECT_LE(std::abs(one.coeffs[n]), 1e-15);
  const auto lin = cheb::interp_coeffs(cheb::Integrand([](double x) { return cplx{2 * x - 1, 0.0}; }), 8);
  EXPECT_LE(std::abs(lin.coeffs[1] - 1.0), 1e-15);
  for (int n = 0; n <= 8; ++n) {
    if (n != 1) EXPECT_LE(std::abs(lin.coeffs[n]), 1e-15);
  }
}

TEST(Cheb, FftMatchesDirectSum) {
  for (int N = 2; N <= 1024; N *= 2) {
    const auto ns = cheb::cc_nodes(N);
    std::vector<cplx> samples(N + 1);
    for (int j = 0; j <= N; ++j) {
      const double x = ns.nodes[j];
      samples[j] = {std::cos(x) + 1.0 / (1 + 16 * x * x), std::sin(3 * x)};
    }
    const auto fast = cheb::interp_coeffs_from_samples(samples);
    const auto direct = cheb::interp_coeffs_direct(samples);
    const double scale = max_abs(direct.coeffs);
    for (int n = 0; n <= N; ++n) {
      EXPECT_LE(std::abs(fast.coeffs[n] - direct.coeffs[n]), 1e-13 * scale) << "N=" << N << " n=" << n;
    }
  }
}

TEST(Cheb, CosineCoefficientsAtEight) {
  const auto f = cosine();
  const auto fast = cheb::interp_coeffs(f, 8);
  std::vector<cplx> samples;
  for (double x : cheb::cc_nodes(8).nodes) samples.push_back(f(x));
  const auto direct = cheb::interp_coeffs_direct(samples);
  for (int n = 0; n <= 8; ++n) EXPECT_LE(std::abs(fast.coeffs[n] - direct.coeffs[n]), 1e-15);
}

TEST(Cheb, NonFiniteSampleRejected) {
  const cheb::Integrand bad([](double x) { return cplx{1.0 / (x - 0.5), 0.0}; });
  EXPECT_THROW(cheb::interp_coeffs(bad, 4), DomainError);
}

TEST(Cheb, EvalBasics) {
  cheb::ChebSeries one;
  one.coeffs = {1.0};
  for (double x : {0.0, 0.3, 1.0}) EXPECT_EQ(cheb::cheb_eval(one, x), cplx(1.0));
  for (int n = 0; n < 12; ++n) {
    cheb::ChebSeries e;
    e.coeffs.assign(n + 1, 0.0);
    e.coeffs[n] = 1.0;
    EXPECT_NEAR(cheb::cheb_eval(e, 1.0).real(), 1.0, 1e-14);
    EXPECT_NEAR(cheb::cheb_eval(e, 0.0).real(), n % 2 ? -1.0 : 1.0, 1e-14);
  }
  EXPECT_THROW(cheb::cheb_eval(one, 1.5), DomainError);
  EXPECT_THROW(cheb::cheb_eval(one, -0.1), DomainError);
}

TEST(Cheb, EvalAgainstMonomialExpansion) {
  // T*_n(x) = T_n(2x - 1); expand every T_n into monomials of t and sum by Horner.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int deg = 10;
  cheb::ChebSeries s;
  for (int n = 0; n <= deg; ++n) s.coeffs.emplace_back(u(rng), u(rng));
  std::vector<std::vector<double>> T(deg + 1, std::vector<double>(deg + 1, 0.0));
  T[0][0] = 1.0;
  T[1][1] = 1.0;
  for (int n = 2; n <= deg; ++n) {
    for (int m = 0; m <= deg; ++m) {
      T[n][m] = -T[n - 2][m] + (m > 0 ? 2.0 * T[n - 1][m - 1] : 0.0);
    }
  }
  std::vector<cplx> mono(deg + 1, 0.0);
  for (int n = 0; n <= deg; ++n) {
    for (int m = 0; m <= deg; ++m) mono[m] += s.coeffs[n] * T[n][m];
  }
  const double x = 0.37;
  const double t = 2 * x - 1;
  cplx horner = 0.0;
  for (int m = deg; m >= 0; --m) horner = horner * t + mono[m];
  EXPECT_LE(std::abs(cheb::cheb_eval(s, x) - horner), 1e-13);
}

TEST(Cheb, EndpointDerivativeClosedForms) {
  for (int n = 0; n < 9; ++n) {
    cheb::ChebSeries e;
    e.coeffs.assign(n + 1, 0.0);
    e.coeffs[n] = 1.0;
    const auto [d0, d1] = cheb::cheb_derivative_at_endpoints(e, 1);
    EXPECT_DOUBLE_EQ(d1.real(), 2.0 * n * n);
    EXPECT_DOUBLE_EQ(d0.real(), (n % 2 ? 1.0 : -1.0) * 2.0 * n * n);
  }
  cheb::ChebSeries t3;
  t3.coeffs = {0.0, 0.0, 0.0, 1.0};
  EXPECT_DOUBLE_EQ(cheb::cheb_derivative_at_endpoints(t3, 2).second.real(), 96.0);
}

TEST(Cheb, HermiteCorrectionTrivialCases) {
  const auto f = cosine();
  const auto base = cheb::interp_coeffs(f, 6);
  const auto same = cheb::hermite_correct(base, f, 6, 0);
  EXPECT_EQ(same.coeffs, base.coeffs);

  // A polynomial of degree <= N is reproduced; the correction is zero.
  const cheb::Integrand cubic([](double x) { return cplx{2 * x * x * x - x, 0.0}; },
                              [](int l, double e) {
                                const double v[4] = {2 * e * e * e - e, 6 * e * e - 1, 12 * e, 12.0};
                                return cplx{l < 4 ? v[l] : 0.0, 0.0};
                              });
  const auto pb = cheb::interp_coeffs(cubic, 6);
  for (int s = 1; s <= 3; ++s) {
    const auto pc = cheb::hermite_correct(pb, cubic, 6, s);
    ASSERT_EQ(pc.degree(), 6 + 2 * s);
    for (int n = 0; n <= pc.degree(); ++n) {
      const cplx b = n <= 6 ? pb.coeffs[n] : cplx{};
      EXPECT_LE(std::abs(pc.coeffs[n] - b), 1e-12) << s << " " << n;
    }
  }
}

TEST(Cheb, HermiteCorrectionCosineSlopes) {
  const auto f = cosine();
  const auto p = cheb::hermite_correct(cheb::interp_coeffs(f, 4), f, 4, 1);
  const auto [d0, d1] = cheb::cheb_derivative_at_endpoints(p, 1);
  EXPECT_LE(std::abs(d0), 1e-12);
  EXPECT_LE(std::abs(d1 + std::sin(1.0)), 1e-12);
}

TEST(Cheb, HermiteCorrectionInterpolatesAndMatchesDerivatives) {
  const std::vector<cheb::Integrand> fs{
      cosine(),
      cheb::Integrand([](double x) { return cplx{1.0 / (1 + 16 * x * x), 0.0}; }),
      cheb::Integrand([](double x) { return cplx{std::exp(x), std::sin(2 * x)}; },
                      [](int l, double e) {
                        const double two_l = std::pow(2.0, l);
                        const double sv[4] = {std::sin(2 * e), std::cos(2 * e), -std::sin(2 * e), -std::cos(2 * e)};
                        return cplx{std::exp(e), two_l * sv[l % 4]};
                      }),
  };
  for (const auto& f : fs) {
    for (int N : {4, 8, 16}) {
      for (int s = 0; s <= 3; ++s) {
        const auto p = cheb::hermite_correct(cheb::interp_coeffs(f, N), f, N, s);
        const auto nodes = cheb::cc_nodes(N).nodes;
        double fmax = 0.0;
        double err = 0.0;
        for (double x : nodes) {
          fmax = std::max(fmax, std::abs(f(x)));
          err = std::max(err, std::abs(cheb::cheb_eval(p, x) - f(x)));
        }
        EXPECT_LE(err, 1e-12 * fmax) << N << " " << s;
        for (int l = 1; l <= s; ++l) {
          const auto [d0, d1] = cheb::cheb_derivative_at_endpoints(p, l);
          const cplx f0 = f.derivative(l, 0.0);
          const cplx f1 = f.derivative(l, 1.0);
          // Finite-difference derivatives carry their own error; analytic ones are exact.
          const double tol = f.has_analytic_derivatives() ? 1e-10 : 1e-5;
          EXPECT_LE(std::abs(d0 - f0), tol * (1 + std::abs(f0))) << N << " " << s << " " << l;
          EXPECT_LE(std::abs(d1 - f1), tol * (1 + std::abs(f1))) << N << " " << s << " " << l;
        }
      }
    }
  }
}

TEST(Cheb, FiniteDifferenceFallback) {
  const cheb::Integrand f([](double x) { return cplx{std::cos(x), 0.0}; });
  EXPECT_FALSE(f.has_analytic_derivatives());
  EXPECT_NEAR(f.derivative(1, 1.0).real(), -std::sin(1.0), 1e-6);
  EXPECT_NEAR(f.derivative(2, 0.0).real(), -1.0, 1e-5);
  EXPECT_THROW(f.derivative(1, 0.5), DomainError);
}
