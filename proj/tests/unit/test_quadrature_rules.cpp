#include <gtest/gtest.h>

#include <cmath>

#include "osci/quadrature_rules.hpp"
#include "osci/specfun.hpp"
#include "osci/startmom.hpp"

using namespace osci;

TEST(QuadratureRules, LaguerreOnePoint) {
  const auto r = startmom::gauss_laguerre_general(0.0, 1);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r.nodes[0], 1.0, 1e-15);
  EXPECT_NEAR(r.weights[0], 1.0, 1e-15);
}

TEST(QuadratureRules, LaguerreWeightSumAndExactness) {
  for (double g : {-0.6, -0.3, 0.0, 0.4, 2.5}) {
    for (int n : {1, 5, 10, 20, 40}) {
      const auto r = startmom::gauss_laguerre_general(g, n);
      double prev = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        EXPECT_GT(r.weights[i], 0.0);
        EXPECT_GT(r.nodes[i], prev);
        prev = r.nodes[i];
      }
      for (int m = 0; m <= 2 * n - 1 && m <= 30; ++m) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], m);
        const double exact = std::exp(std::lgamma(g + m + 1.0));
        EXPECT_LE(std::abs(s - exact), 1e-12 * exact) << "gamma=" << g << " n=" << n << " m=" << m;
      }
    }
  }
}

TEST(QuadratureRules, LaguerreCubicMomentAtTenPoints) {
  const auto r = startmom::gauss_laguerre_general(0.4, 10);
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 3);
  EXPECT_LE(std::abs(s - specfun::gamma_fn(4.4)) / specfun::gamma_fn(4.4), 1e-13);
}

TEST(QuadratureRules, LegendreAndJacobi) {
  for (int n : {1, 2, 7, 20, 64}) {
    const auto r = quad::gauss_legendre(n);
    double s = 0.0;
    double s4 = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r.weights[i];
      s4 += r.weights[i] * std::pow(r.nodes[i], 4);
    }
    EXPECT_NEAR(s, 2.0, 1e-14);
    if (n >= 3) EXPECT_NEAR(s4, 0.4, 1e-14);
  }
  // int_{-1}^{1} (1-t)^a (1+t)^b dt = 2^{a+b+1} B(a+1, b+1)
  const double a = -0.3;
  const double b = 0.6;
  const auto r = quad::gauss_jacobi(a, b, 12);
  double s = 0.0;
  for (double w : r.weights) s += w;
  const double exact = std::pow(2.0, a + b + 1) * std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
  EXPECT_LE(std::abs(s - exact) / exact, 1e-14);
}

TEST(QuadratureRules, LeftWeightedUnitRule) {
  // int_0^1 x^p x^m dx = 1 / (p + m + 1)
  for (double p : {-0.9, -0.6, 0.0, 1.3}) {
    const auto r = quad::left_weighted_unit_rule(p, 10);
    for (int m = 0; m < 20; ++m) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], m);
      EXPECT_LE(std::abs(s - 1.0 / (p + m + 1)) * (p + m + 1), 1e-13) << p << " " << m;
    }
  }
}

TEST(QuadratureRules, CacheSharesRules) {
  const auto a = quad::cached_gauss_laguerre(0.25, 16);
  const auto b = quad::cached_gauss_laguerre(0.25, 16);
  EXPECT_EQ(a.get(), b.get());
  const auto direct = quad::gauss_laguerre(0.25, 16);
  EXPECT_EQ(a->nodes, direct.nodes);
}

TEST(QuadratureRules, RejectsBadParameters) {
  EXPECT_ANY_THROW(quad::gauss_laguerre(-1.0, 4));
  EXPECT_ANY_THROW(quad::gauss_legendre(0));
  EXPECT_ANY_THROW(quad::gauss_jacobi(0.0, -1.5, 3));
}
