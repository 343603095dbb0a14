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
#include <random>

#include "majorbound/quantum_state.hpp"

namespace majorbound {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer over (seed, stream); gives independent per-restart
/// or per-case seeds from one user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix haar_unitary(Eigen::Index d, Rng& rng);

/// Uniformly distributed unit vector in C^d.
StateVector random_pure_vector(Eigen::Index d, Rng& rng);

/// U diag(lambda) U^dagger with Haar U and lambda uniform on the simplex.
DensityMatrix random_density_matrix(Eigen::Index d, Rng& rng);

/// Rank-1 POVM with `outcomes` >= d elements: draws Haar-random vectors v_k,
/// sets S = sum |v_k><v_k| and E_k = S^{-1/2} |v_k><v_k| S^{-1/2}.
Measurement random_rank_one_povm(Eigen::Index d, std::size_t outcomes, Rng& rng);

}  // namespace majorbound
