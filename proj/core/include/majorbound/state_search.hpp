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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "majorbound/quantum_state.hpp"

namespace majorbound {

struct SearchConfig {
  int restarts = 64;
  int max_iterations = 200;
  double step_tolerance = 1e-10;
  std::uint64_t seed = 42;
  bool pure_only = false;
  /// Worker threads for restarts; 0 picks std::thread::hardware_concurrency.
  unsigned threads = 0;
};

/// Throws DomainError for restarts < 1, max_iterations < 1 or a nonpositive
/// step tolerance.
void validate(const SearchConfig& cfg);

enum class Goal { kMaximize, kMinimize };

/// Best state found for one objective, plus bookkeeping about which search
/// produced it. `pure_value` / `mixed_value` are the best values of the two
/// state families (NaN when a family was not searched).
struct SearchOutcome {
  double value = 0.0;
  DensityMatrix state = DensityMatrix::maximally_mixed(1);
  std::string method;
  bool converged = false;
  double pure_value = 0.0;
  double mixed_value = 0.0;
};

/// Sum of the j largest entries of a raw probability vector.
double top_sum(std::span<const double> p, std::size_t j);

/// Optimizes the sum of the j largest joint-distribution entries over states,
/// for every j = 1..D (D = product of outcome counts). Element j-1 of the
/// result is the outcome for j.
///
/// Pure states live on the unit sphere of C^d; mixed states are A A^dagger
/// with A on the unit sphere of C^{d x d}. Both run a seeded multistart
/// projected-gradient search with step halving. Qubit measurement sets also
/// get a 2-degree Bloch grid (ball for mixed states) refined by a shrinking
/// local grid. The best value over all searches wins; ties prefer the search
/// listed first (grid, then gradient; pure before mixed).
std::vector<SearchOutcome> optimize_top_sums(std::span<const Measurement> ms, Goal goal,
                                             const SearchConfig& cfg);

/// Same search for a single j.
SearchOutcome optimize_top_sum(std::span<const Measurement> ms, std::size_t j, Goal goal,
                               const SearchConfig& cfg);

}  // namespace majorbound
