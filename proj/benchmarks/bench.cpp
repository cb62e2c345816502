#include <benchmark/benchmark.h>

#include "fracwave/estimates.hpp"
#include "fracwave/lemma_oracles.hpp"
#include "fracwave/spectral_core.hpp"

using namespace fracwave;

namespace {

const InitialData kData{Profile::gaussian(), Profile::gaussian()};

void grid_evolve(benchmark::State& state) {
  EvolveOptions o;
  o.grid = GridSpec(40.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto snap = evolve_state(kData, {1, 0.75}, 50.0, o);
    benchmark::DoNotOptimize(snap.u_physical().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(grid_evolve)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void quadrature_norm(benchmark::State& state) {
  EvolveOptions o;
  o.backend = Backend::quadrature;
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_l2_norm(evolve_state(kData, {1, 0.6}, t, o)));
}
BENCHMARK(quadrature_norm)->RangeMultiplier(10)->Range(10, 100000)->Unit(benchmark::kMillisecond);

void k1(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k1_log_integral(t));
}
BENCHMARK(k1)->RangeMultiplier(100)->Range(10, 1000000)->Unit(benchmark::kMillisecond);

void area(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(area_sums(t).total);
}
BENCHMARK(area)->RangeMultiplier(100)->Range(10, 100000)->Unit(benchmark::kMillisecond);

void riesz(benchmark::State& state) {
  const auto d = Profile::gaussian_derivative();
  for (auto _ : state) benchmark::DoNotOptimize(riesz_energy(d, 0.9));
}
BENCHMARK(riesz)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
