#include <benchmark/benchmark.h>

#include "ahscatter/dnmap.hpp"
#include "ahscatter/gauge.hpp"
#include "ahscatter/ode.hpp"
#include "ahscatter/scattering.hpp"
#include "ahscatter/specfun.hpp"

using namespace ahscatter;

static void BM_ThetaSymbol(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> c(n);
  for (int i = 0; i < n; ++i) c[i] = 0.3 + 0.1 * i;
  const Covector xi(c);
  for (auto _ : state) benchmark::DoNotOptimize(theta_symbol(Dim(n), xi));
}
BENCHMARK(BM_ThetaSymbol)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

static void BM_WstarW(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Covector xi = Covector::unit(n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(wstar_w(Dim(n), xi));
}
BENCHMARK(BM_WstarW)->Arg(5)->Arg(7);

static void BM_ScatteringOde(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scattering_ratio_ode(Dim(n), n + 0.4, 1.0));
}
BENCHMARK(BM_ScatteringOde)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_FrobeniusExactL(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<QComplex> xi(n, QComplex(0));
  xi[0] = QComplex(Rational(1, 3));
  const auto sys = build_L_system_t<QComplex>(Dim(n), QComplex(n), xi);
  std::vector<QComplex> lead(sys.N, QComplex(0));
  lead[packed_index(2, 3, n + 1)] = QComplex(1);
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_series(sys, QComplex(0), lead, 2 * n + 4));
}
BENCHMARK(BM_FrobeniusExactL)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_GaugeJetsExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = n + 1;
  std::vector<QComplex> xi(n, QComplex(0));
  xi[0] = QComplex(1);
  auto ht = JetSeries<QComplex>::zeros(packed_size(m), n);
  for (int k = 0; k <= n; ++k)
    for (int s = 0; s < packed_size(m); ++s) ht.at(k)[s] = QComplex(Rational((k + 2 * s) % 7 - 3, 1 + s % 4));
  for (auto _ : state) benchmark::DoNotOptimize(gauge_jets<QComplex>(Dim(n), xi, ht));
}
BENCHMARK(BM_GaugeJetsExact)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BesselK(benchmark::State& state) {
  const BesselOrder nu(3.25);
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_k(nu, x));
    x = x < 20.0 ? x + 0.37 : 0.5;
  }
}
BENCHMARK(BM_BesselK);
BENCHMARK_MAIN();
