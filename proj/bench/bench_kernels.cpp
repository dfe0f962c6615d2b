// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "irs/geometry.hpp"
#include "irs/kernels.hpp"
#include "irs/scenario.hpp"

namespace {

using namespace irs;

Scenario bench_scenario(int side) {
  Scenario s;
  s.gt = {150.0, 0.0, 0.0};
  s.airspace = {{-25.0, -10.0, 25.0}, {75.0, 10.0, 50.0}};
  s.array = build_upa_offsets(side, side, 0.025, 0.025);
  s.pattern = PatternParams::with_directivity(4.0);
  return s;
}

std::vector<Vec3> bench_centers(const AirspaceBox& box, int count) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Vec3> out;
  const Vec3 ext = box.extent();
  for (int i = 0; i < count; ++i) {
    const double ux = u(rng);
    const double uy = u(rng);
    const double uz = u(rng);
    out.push_back({box.min.x + ux * ext.x, box.min.y + uy * ext.y, box.min.z + uz * ext.z});
  }
  return out;
}

template <kernels::Exec E>
void BM_Objective(benchmark::State& state) {
  const Scenario s = bench_scenario(static_cast<int>(state.range(0)));
  const Vec3 c{20.0, 1.0, 30.0};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::objective(s, c, E));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(s.array.size()));
}

template <kernels::Exec E>
void BM_ObjectiveAndGradient(benchmark::State& state) {
  const Scenario s = bench_scenario(static_cast<int>(state.range(0)));
  const Vec3 c{20.0, 1.0, 30.0};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::objective_and_gradient(s, c, E));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(s.array.size()));
}

template <kernels::Exec E>
void BM_ObjectiveAt(benchmark::State& state) {
  const Scenario s = bench_scenario(20);
  const std::vector<Vec3> centers = bench_centers(s.airspace, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::objective_at(s, centers, E));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(centers.size()));
}

constexpr auto kSerial = kernels::Exec::Serial;
constexpr auto kParallel = kernels::Exec::Parallel;

BENCHMARK(BM_Objective<kSerial>)->Arg(20)->Arg(60)->Arg(120);
BENCHMARK(BM_Objective<kParallel>)->Arg(20)->Arg(60)->Arg(120);
BENCHMARK(BM_ObjectiveAndGradient<kSerial>)->Arg(20)->Arg(60)->Arg(120);
BENCHMARK(BM_ObjectiveAndGradient<kParallel>)->Arg(20)->Arg(60)->Arg(120);
BENCHMARK(BM_ObjectiveAt<kSerial>)->Arg(256)->Arg(4096);
BENCHMARK(BM_ObjectiveAt<kParallel>)->Arg(256)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
