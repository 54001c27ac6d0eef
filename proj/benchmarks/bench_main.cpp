#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "claws/checks.hpp"
#include "claws/fft.hpp"
#include "claws/field.hpp"
#include "claws/random_fields.hpp"
#include "claws/semigroup.hpp"
#include "claws/solver.hpp"

using namespace claws;

namespace {

Grid grid_for(const benchmark::State& state) {
  return Grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 100.0);
}

void BM_ForwardBackward(benchmark::State& state) {
  const Grid g = grid_for(state);
  std::mt19937_64 rng(1);
  std::vector<Complex> data = random_band_limited(g, rng, 8).coeffs;
  for (auto _ : state) {
    fft::backward(data, g.dim(), g.points());
    fft::forward(data, g.dim(), g.points());
    benchmark::DoNotOptimize(data.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_ForwardBackward)->Args({1, 4096})->Args({1, 65536})->Args({2, 256})->Args({2, 512});

void BM_IfRk4Step(benchmark::State& state) {
  const Grid g = grid_for(state);
  const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
  IfRk4Stepper stepper(spec, FluxModel::burgers(g.dim()), g);
  std::mt19937_64 rng(2);
  std::vector<Complex> u = random_band_limited(g, rng, 8, true).coeffs;
  for (auto& c : u) c *= 1e-3;
  for (auto _ : state) {
    stepper.step(u, 0.01);
    benchmark::DoNotOptimize(u.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_IfRk4Step)->Args({1, 4096})->Args({2, 256});

void BM_RadialQuadrature(benchmark::State& state) {
  const DissipationSpec spec(FrequencySymbol::sobolev(), 1.0);
  const auto profile = RadialProfile::gaussian(1, 1.0);
  const auto mode = static_cast<FlowMode>(state.range(0));
  const double t = std::pow(10.0, static_cast<double>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial_norm_quadrature(spec, profile, t, 1, mode));
  }
}
BENCHMARK(BM_RadialQuadrature)
    ->Args({static_cast<int>(FlowMode::full), 1})
    ->Args({static_cast<int>(FlowMode::full), 4})
    ->Args({static_cast<int>(FlowMode::gap), 1})
    ->Args({static_cast<int>(FlowMode::gap), 4});

void BM_InterpolationCheck(benchmark::State& state) {
  const Grid g(2, 32, 2.0 * 3.14159265358979323846);
  std::mt19937_64 rng(3);
  const auto f = random_band_limited(g, rng, 10);
  for (auto _ : state) benchmark::DoNotOptimize(interpolation_check(f, 1, 1.0));
}
BENCHMARK(BM_InterpolationCheck);

}  // namespace

BENCHMARK_MAIN();
