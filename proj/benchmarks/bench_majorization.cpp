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

#include <vector>

#include "majorbound/concave_measure.hpp"
#include "majorbound/majorization.hpp"
#include "majorbound/sampling.hpp"

namespace {

using namespace majorbound;

std::vector<ProbVec> random_vectors(std::size_t count, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<ProbVec> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> v(d);
    double total = 0.0;
    for (auto& x : v) total += (x = expo(rng));
    for (auto& x : v) x /= total;
    out.emplace_back(std::move(v));
  }
  return out;
}

void BM_Compare(benchmark::State& state) {
  const auto vs = random_vectors(2, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(compare(vs[0], vs[1]));
}
BENCHMARK(BM_Compare)->RangeMultiplier(4)->Range(4, 1024);

void BM_Supremum(benchmark::State& state) {
  const auto vs = random_vectors(8, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(supremum(vs));
}
BENCHMARK(BM_Supremum)->RangeMultiplier(4)->Range(4, 1024);

void BM_Infimum(benchmark::State& state) {
  const auto vs = random_vectors(8, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(infimum(vs));
}
BENCHMARK(BM_Infimum)->RangeMultiplier(4)->Range(4, 1024);

void BM_OuterProductEntropy(benchmark::State& state) {
  const auto vs = random_vectors(3, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(shannon_entropy(outer_product(vs).entries()));
}
BENCHMARK(BM_OuterProductEntropy)->Arg(2)->Arg(8)->Arg(32);

}  // namespace
