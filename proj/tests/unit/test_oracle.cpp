#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "osci/error.hpp"
#include "osci/oracle.hpp"
#include "osci/specfun.hpp"

using namespace osci;
using oracle::cplx;

TEST(Oracle, KernelBypassOnBetaFunction) {
  // int_0^1 x^a (1-x)^b dx = B(a+1, b+1)
  for (auto [a, b] : {std::pair{-0.6, -0.3}, std::pair{0.4, 0.5}, std::pair{-0.95, 2.0}}) {
    oracle::WeightOptions w;
    w.bypass_kernel = true;
    const cplx v = oracle::reference_integral([](double) { return cplx{1.0, 0.0}; }, ProblemParams(a, b, 0, 0, 1), {}, w);
    const double exact = std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
    EXPECT_LE(std::abs(v - exact) / exact, 1e-13) << a << " " << b;
  }
}

TEST(Oracle, LogWeightsOnBetaDerivative) {
  // int x^a (1-x)^b ln x dx = B(a+1,b+1) (psi(a+1) - psi(a+b+2))
  const double a = -0.4;
  const double b = -0.3;
  const double B = std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
  auto digamma = [](double x) {
    // Enough accuracy for the test via the Gamma ratio central difference.
    const double h = 1e-6;
    return (std::lgamma(x + h) - std::lgamma(x - h)) / (2 * h);
  };
  oracle::WeightOptions w;
  w.bypass_kernel = true;
  w.log_x = true;
  const cplx v = oracle::reference_integral([](double) { return cplx{1.0, 0.0}; }, ProblemParams(a, b, 0, 0, 1), {}, w);
  EXPECT_NEAR(v.real() / (B * (digamma(a + 1) - digamma(a + b + 2))), 1.0, 1e-8);
}

TEST(Oracle, ReproducesKnownValue) {
  const ProblemParams p(-0.6, -0.3, 0.0, 10, 10);
  const cplx v = oracle::reference_integral([](double x) { return cplx{std::cos(x), 0.0}; }, p);
  const cplx ref(0.841824877078759, -1.172097304662626);
  EXPECT_LE(std::abs(v - ref) / std::abs(ref), 1e-12);
}

TEST(Oracle, MomentUsesShiftedChebyshev) {
  const ProblemParams p(-0.2, -0.3, 0.3, 5, 10);
  const cplx m2 = oracle::reference_moment(p, 2);
  const cplx direct = oracle::reference_integral([](double x) { return cplx{8 * x * x - 8 * x + 1, 0.0}; }, p);
  EXPECT_LE(std::abs(m2 - direct), 1e-13 * std::abs(direct));
  EXPECT_EQ(oracle::reference_moment(p, -3), oracle::reference_moment(p, 3));
}

TEST(Oracle, CapWarningOnly) {
  oracle::OracleConfig cfg;
  cfg.frequency_cap = 10.0;
  std::string message;
  cfg.warn = [&](std::string_view m) { message = m; };
  const ProblemParams p(0.0, 0.0, 0.0, 10, 10);
  EXPECT_NO_THROW(oracle::reference_integral([](double) { return cplx{1.0, 0.0}; }, p, cfg));
  EXPECT_NE(message.find("cap"), std::string::npos);
}

TEST(Oracle, DoublingFailureIsReported) {
  oracle::OracleConfig cfg;
  cfg.points_per_panel = 2;
  cfg.rel_tol = 1e-14;
  const ProblemParams p(-0.6, -0.3, 0.0, 10, 10);
  EXPECT_THROW(oracle::reference_integral([](double x) { return cplx{std::cos(x), 0.0}; }, p, cfg), AccuracyError);
  cfg.grading_ratio = 1.5;
  EXPECT_THROW(oracle::reference_integral([](double) { return cplx{1.0, 0.0}; }, p, cfg), DomainError);
}
