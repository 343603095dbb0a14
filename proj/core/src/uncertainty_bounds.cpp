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

#include "majorbound/uncertainty_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "majorbound/tolerances.hpp"

namespace majorbound {

namespace {

Witness to_witness(std::size_t j, const SearchOutcome& o) {
  return {j, o.value, o.state, o.method, o.pure_value, o.mixed_value};
}

/// Envelope from per-j extremal values: forced to start at 0, end at 1 and
/// be nondecreasing in between.
PrefixEnvelope assemble_envelope(const std::vector<SearchOutcome>& outcomes) {
  PrefixEnvelope env;
  env.partial_sums.assign(outcomes.size() + 1, 0.0);
  double running = 0.0;
  for (std::size_t j = 1; j <= outcomes.size(); ++j) {
    running = std::clamp(std::max(running, outcomes[j - 1].value), 0.0, 1.0);
    env.partial_sums[j] = running;
  }
  env.partial_sums.back() = 1.0;
  return env;
}

BoundResult build(const std::vector<SearchOutcome>& outcomes, bool flatten_increments) {
  BoundResult result;
  result.envelope = assemble_envelope(outcomes);
  result.bound = flatten_increments ? supremum_from_envelope(result.envelope)
                                    : infimum_from_envelope(result.envelope);
  for (std::size_t j = 1; j <= outcomes.size(); ++j) {
    result.witnesses.push_back(to_witness(j, outcomes[j - 1]));
    result.converged = result.converged && outcomes[j - 1].converged;
  }
  return result;
}

}  // namespace

ComponentResult mu_sup_component(std::span<const Measurement> ms, std::size_t j,
                                 const SearchConfig& cfg) {
  const auto o = optimize_top_sum(ms, j, Goal::kMaximize, cfg);
  return {o.value, to_witness(j, o), o.converged};
}

BoundResult supremum_bound(std::span<const Measurement> ms, const SearchConfig& cfg) {
  return build(optimize_top_sums(ms, Goal::kMaximize, cfg), true);
}

BoundResult infimum_bound(std::span<const Measurement> ms, const SearchConfig& cfg) {
  return build(optimize_top_sums(ms, Goal::kMinimize, cfg), false);
}

double quasi_entropic_uncertainty(const ConcaveMeasure& F, std::span<const Measurement> ms,
                                  const DensityMatrix& rho) {
  return F.normalized(joint_distribution(ms, rho));
}

double entropic_lower_bound(const ConcaveMeasure& F, const BoundResult& sup) {
  return F.normalized(sup.bound);
}

double entropic_lower_bound(const ConcaveMeasure& F, std::span<const Measurement> ms,
                            const SearchConfig& cfg) {
  return entropic_lower_bound(F, supremum_bound(ms, cfg));
}

std::optional<CommonEigenstate> has_common_eigenstate(std::span<const Measurement> ms,
                                                      double tol) {
  if (ms.empty()) return std::nullopt;
  const Eigen::Index d = ms.front().dim();
  require_dimension(ms, d);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);

  std::vector<std::size_t> pick(ms.size(), 0);
  for (;;) {
    ComplexMatrix defect = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 0; k < ms.size(); ++k) defect += id - ms[k].elements()[pick[k]];
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (defect + defect.adjoint()));
    if (solver.info() == Eigen::Success && solver.eigenvalues()[0] <= tol) {
      StateVector psi = solver.eigenvectors().col(0);
      // Fix the global phase: first nonzero component real positive.
      for (Eigen::Index i = 0; i < d; ++i) {
        if (std::abs(psi[i]) > 1e-12) {
          psi *= std::conj(psi[i]) / std::abs(psi[i]);
          break;
        }
      }
      double residual = 0.0;
      for (std::size_t k = 0; k < ms.size(); ++k) {
        residual = std::max(residual, (ms[k].elements()[pick[k]] * psi - psi).norm());
      }
      if (residual <= tol) return CommonEigenstate{psi, pick};
    }
    // Next index combination, last measurement fastest.
    std::size_t k = ms.size();
    while (k > 0) {
      --k;
      if (++pick[k] < ms[k].outcome_count()) break;
      pick[k] = 0;
      if (k == 0) return std::nullopt;
    }
  }
}

std::vector<Measurement> preset_measurements(const std::string& name) {
  const auto x = spin_component_measurement(Axis::kX);
  const auto y = spin_component_measurement(Axis::kY);
  const auto z = spin_component_measurement(Axis::kZ);
  if (name == "mub2") return {x, y};
  if (name == "mub3") return {x, y, z};
  if (name == "xx") return {x, x};
  throw DomainError("unknown measurement preset '" + name + "' (expected mub2, mub3 or xx)");
}

}  // namespace majorbound
