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

namespace majorbound::tol {

/// Entries of a probability vector with magnitude below this are zero.
inline constexpr double kProb = 1e-12;
/// Normalization slack for probability vectors and prefix envelopes.
inline constexpr double kSum = 1e-9;
/// Two prefix sums closer than this compare equal.
inline constexpr double kPrefix = 1e-9;
/// Max entrywise |A - A^dagger| accepted as Hermitian.
inline constexpr double kHerm = 1e-10;
/// Eigenvalue slack for positive semidefiniteness and operator norms.
inline constexpr double kPsd = 1e-9;
/// Entrywise slack for POVM completeness and M^dagger M == E.
inline constexpr double kComplete = 1e-9;

}  // namespace majorbound::tol
