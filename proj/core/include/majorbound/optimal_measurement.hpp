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

#include "majorbound/majorization.hpp"
#include "majorbound/quantum_state.hpp"

namespace majorbound {

/// Eigenvalues of a density matrix, descending.
struct Spectrum {
  ProbVec values;
};

/// Hermitian eigenvalues clipped to [0, 1], sorted descending, renormalized.
Spectrum spectrum_descending(const DensityMatrix& rho);

/// Projective measurement onto the eigenvectors of rho, ordered by descending
/// eigenvalue. Inside a degenerate block (eigenvalues within tol::kPsd) each
/// vector's global phase is fixed so its first nonzero component is real
/// positive, and vectors are ordered lexicographically by the real parts of
/// their components. Its outcome distribution equals the spectrum.
Measurement least_uncertain_measurement(const DensityMatrix& rho);

/// True iff every element has exactly one eigenvalue above tol::kPsd.
bool is_rank_one(const Measurement& m);

/// compare(born_probabilities(m, rho), spectrum). For rank-1 m the result is
/// always StrictlyBelow or Equivalent. Throws DomainError for a non-rank-1
/// measurement or a dimension mismatch.
MajorizationOrder verify_spectral_bound(const DensityMatrix& rho, const Measurement& m);

/// Shannon entropy of the spectrum, in nats.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace majorbound
