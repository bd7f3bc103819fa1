#include <benchmark/benchmark.h>

#include "oblique/cone.hpp"
#include "oblique/cylinder.hpp"
#include "oblique/elliptic.hpp"
#include "oblique/halfcone.hpp"
#include "oblique/optimize.hpp"
#include "oblique/oracle.hpp"

namespace {

using namespace oblique;

void BM_EllipK(benchmark::State& state) {
  double mu = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ellip_k(mu));
    mu = mu < 0.9 ? mu + 1e-3 : 0.3;
  }
}
BENCHMARK(BM_EllipK);

void BM_EllipE(benchmark::State& state) {
  double mu = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ellip_e(mu));
    mu = mu < 0.9 ? mu + 1e-3 : 0.3;
  }
}
BENCHMARK(BM_EllipE);

void BM_EllipPi(benchmark::State& state) {
  double nu = -0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ellip_pi(nu, 0.6));
    nu = nu < 0.5 ? nu + 1e-3 : -0.5;
  }
}
BENCHMARK(BM_EllipPi);

void BM_CylMeasures(benchmark::State& state) {
  const CylinderGeom g(1.5, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(cyl_measures(g));
}
BENCHMARK(BM_CylMeasures);

void BM_ConeArea(benchmark::State& state) {
  const ConeGeom g(1.5, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(cone_area(g));
}
BENCHMARK(BM_ConeArea);

void BM_ConeMeasures(benchmark::State& state) {
  const ConeGeom g(1.5, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(cone_measures(g));
}
BENCHMARK(BM_ConeMeasures);

void BM_HalfMeasures(benchmark::State& state) {
  const ConeGeom g(1.5, 0.8);
  const auto side = state.range(0) == 0 ? HalfSide::smaller : HalfSide::larger;
  for (auto _ : state) benchmark::DoNotOptimize(half_measures(g, side));
}
BENCHMARK(BM_HalfMeasures)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Solve(benchmark::State& state) {
  const auto p = static_cast<Problem>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(p));
}
BENCHMARK(BM_Solve)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_SphereMC(benchmark::State& state) {
  const SupportBody body{HullKind::cone, 1.0, 1.0};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mw_oracle(body, MonteCarlo{n, 7}));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SphereMC)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_SphereGrid(benchmark::State& state) {
  const SupportBody body{HullKind::cone, 1.0, 1.0};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mw_oracle(body, LatLongGrid{n, 2 * n}));
}
BENCHMARK(BM_SphereGrid)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
