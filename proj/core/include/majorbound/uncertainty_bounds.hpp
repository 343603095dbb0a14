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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "majorbound/concave_measure.hpp"
#include "majorbound/majorization.hpp"
#include "majorbound/quantum_state.hpp"
#include "majorbound/state_search.hpp"

namespace majorbound {

/// State attaining envelope component j (1-based).
struct Witness {
  std::size_t j = 0;
  double value = 0.0;
  DensityMatrix state = DensityMatrix::maximally_mixed(1);
  std::string method;      // which search produced the value
  double pure_value = 0.0;   // best over pure states
  double mixed_value = 0.0;  // best over mixed states; NaN if not searched
};

struct BoundResult {
  PrefixEnvelope envelope;  // mu_0 = 0, ..., mu_D = 1
  ProbVec bound = ProbVec::certain(1);
  std::vector<Witness> witnesses;
  bool converged = true;  // false if some component's search hit max_iterations
};

struct ComponentResult {
  double value = 0.0;
  Witness witness;
  bool converged = true;
};

/// max over states of the sum of the j largest joint-distribution entries.
ComponentResult mu_sup_component(std::span<const Measurement> ms, std::size_t j,
                                 const SearchConfig& cfg);

/// State-independent majorization bound: the supremum of the joint
/// distribution over all states (upper envelope, differenced and flattened).
BoundResult supremum_bound(std::span<const Measurement> ms, const SearchConfig& cfg);

/// Infimum of the joint distribution over states (pure states only when
/// cfg.pure_only). The differenced lower envelope is already descending.
BoundResult infimum_bound(std::span<const Measurement> ms, const SearchConfig& cfg);

/// F[joint distribution] - F[(1, 0, ..., 0)].
double quasi_entropic_uncertainty(const ConcaveMeasure& F, std::span<const Measurement> ms,
                                  const DensityMatrix& rho);

/// F[supremum bound] - F[(1, 0, ..., 0)]; no state scores below this.
double entropic_lower_bound(const ConcaveMeasure& F, std::span<const Measurement> ms,
                            const SearchConfig& cfg);
/// Same, reusing an already computed bound.
double entropic_lower_bound(const ConcaveMeasure& F, const BoundResult& sup);

struct CommonEigenstate {
  StateVector state;
  std::vector<std::size_t> outcomes;  // element index per measurement
};

/// Looks for a unit vector psi and one element per measurement with
/// E psi = psi (within `tol` in norm). psi is a common eigenvalue-1 vector iff
/// it lies in the kernel of sum_k (I - E_k), a sum of PSD operators.
std::optional<CommonEigenstate> has_common_eigenstate(std::span<const Measurement> ms,
                                                      double tol = 1e-8);

/// Named measurement sets used by the CLI and tests: "mub2" = [sigma_x,
/// sigma_y], "mub3" = [sigma_x, sigma_y, sigma_z], "xx" = [sigma_x, sigma_x].
std::vector<Measurement> preset_measurements(const std::string& name);

}  // namespace majorbound
