#include <benchmark/benchmark.h>

#include <cmath>

#include "osci/ccf.hpp"
#include "osci/oracle.hpp"
#include "osci/startmom.hpp"

namespace {

using osci::ProblemParams;
using cplx = std::complex<double>;

const ProblemParams kParams(-0.6, -0.3, 0.0, 10.0, 50.0);

osci::cheb::Integrand cosine() {
  return osci::cheb::Integrand([](double x) { return cplx{std::cos(x), 0.0}; }, [](int l, double e) {
    const double v = (l % 2 == 0) ? std::cos(e) : std::sin(e);
    return cplx{(l % 4 == 1 || l % 4 == 2) ? -v : v, 0.0};
  });
}

const osci::moments::MomentTable& table() {
  static const auto t = osci::ccf::moment_table(kParams, (1 << 15) + 8, {});
  return t;
}

// Coefficients plus summation with the moments already available.
void BM_CoefficientsAndSum(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto f = cosine();
  const auto& m = table();
  for (auto _ : state) {
    const auto a = osci::ccf::ccf_coefficients(f, N, 2);
    benchmark::DoNotOptimize(osci::ccf::ccf_sum(a, m));
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_CoefficientsAndSum)->RangeMultiplier(4)->Range(16, 1 << 15)->Complexity(benchmark::oNLogN);

void BM_MomentTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(osci::ccf::moment_table(kParams, n, {}));
}
BENCHMARK(BM_MomentTable)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMicrosecond);

void BM_StartingIntegrals(benchmark::State& state) {
  const ProblemParams p(-0.6, -0.3, 0.0, 10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(osci::startmom::starting_integrals(p));
}
BENCHMARK(BM_StartingIntegrals)->Arg(20)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_Integrate(benchmark::State& state) {
  osci::ccf::MethodConfig cfg;
  cfg.N = static_cast<int>(state.range(0));
  cfg.s = 2;
  const auto f = cosine();
  for (auto _ : state) benchmark::DoNotOptimize(osci::ccf::ccf_integrate(f, kParams, cfg).value);
}
BENCHMARK(BM_Integrate)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_Oracle(benchmark::State& state) {
  const auto f = cosine();
  for (auto _ : state) benchmark::DoNotOptimize(osci::oracle::reference_integral(f, kParams));
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
