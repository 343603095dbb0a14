// Copyright 2026 The majorbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "majorbound/conjugate_pair.hpp"
#include "majorbound/optimal_measurement.hpp"
#include "majorbound/sampling.hpp"
#include "majorbound/uncertainty_bounds.hpp"

namespace {

using namespace majorbound;

void BM_JointDistribution(benchmark::State& state) {
  const auto ms = preset_measurements("mub3");
  Rng rng(1);
  const auto rho = random_density_matrix(2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(joint_distribution(ms, rho));
}
BENCHMARK(BM_JointDistribution);

void BM_SupremumBound(benchmark::State& state, const char* preset) {
  const auto ms = preset_measurements(preset);
  SearchConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(supremum_bound(ms, cfg));
}
BENCHMARK_CAPTURE(BM_SupremumBound, mub2, "mub2")->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SupremumBound, mub3, "mub3")->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_QutritSupremum(benchmark::State& state) {
  Rng rng(2);
  const std::vector<Measurement> ms{random_rank_one_povm(3, 3, rng), random_rank_one_povm(3, 4, rng)};
  SearchConfig cfg;
  cfg.restarts = 16;
  for (auto _ : state) benchmark::DoNotOptimize(supremum_bound(ms, cfg));
}
BENCHMARK(BM_QutritSupremum)->Unit(benchmark::kMillisecond);

void BM_SolveSpectrum(benchmark::State& state) {
  const auto params = PhaseSpaceParams::from_s(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_spectrum(params, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SolveSpectrum)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_LeastUncertain(benchmark::State& state) {
  Rng rng(3);
  const auto rho = random_density_matrix(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(least_uncertain_measurement(rho));
}
BENCHMARK(BM_LeastUncertain)->Arg(2)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
