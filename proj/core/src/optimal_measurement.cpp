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

#include "majorbound/optimal_measurement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "majorbound/tolerances.hpp"

namespace majorbound {

namespace {

struct Eigenpair {
  double value;
  StateVector vector;
};

StateVector fix_phase(StateVector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > 1e-12) {
      v *= std::conj(v[i]) / mag;
      v[i] = Complex(v[i].real(), 0.0);
      break;
    }
  }
  return v;
}

bool real_parts_less(const StateVector& a, const StateVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].real() - b[i].real()) > 1e-12) return a[i].real() < b[i].real();
  }
  return false;
}

std::vector<Eigenpair> sorted_eigenpairs(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
  if (solver.info() != Eigen::Success) throw DomainError("Hermitian eigensolver failed");
  std::vector<Eigenpair> pairs;
  for (Eigen::Index k = 0; k < rho.dim(); ++k) {
    pairs.push_back({solver.eigenvalues()[k], fix_phase(solver.eigenvectors().col(k))});
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Eigenpair& a, const Eigenpair& b) { return a.value > b.value; });
  // Reorder within degenerate blocks.
  std::size_t start = 0;
  while (start < pairs.size()) {
    std::size_t stop = start + 1;
    while (stop < pairs.size() && pairs[stop - 1].value - pairs[stop].value <= tol::kPsd) ++stop;
    std::sort(pairs.begin() + static_cast<std::ptrdiff_t>(start),
              pairs.begin() + static_cast<std::ptrdiff_t>(stop),
              [](const Eigenpair& a, const Eigenpair& b) {
                return real_parts_less(a.vector, b.vector);
              });
    start = stop;
  }
  return pairs;
}

}  // namespace

Spectrum spectrum_descending(const DensityMatrix& rho) {
  Eigen::VectorXd ev = hermitian_eigenvalues(rho.matrix());
  std::vector<double> values(ev.data(), ev.data() + ev.size());
  for (double& x : values) x = std::clamp(x, 0.0, 1.0);
  std::sort(values.begin(), values.end(), std::greater<>());
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  for (double& x : values) x /= total;
  return {ProbVec(std::move(values))};
}

Measurement least_uncertain_measurement(const DensityMatrix& rho) {
  const auto pairs = sorted_eigenpairs(rho);
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(pairs.size());
  for (const auto& p : pairs) projectors.push_back(p.vector * p.vector.adjoint());
  // Rank-1 projectors are their own measurement operators.
  auto operators = projectors;
  return Measurement("least_uncertain", std::move(projectors), std::move(operators));
}

bool is_rank_one(const Measurement& m) {
  for (const auto& e : m.elements()) {
    const auto ev = hermitian_eigenvalues(e);
    const auto rank = std::count_if(ev.data(), ev.data() + ev.size(),
                                    [](double x) { return x > tol::kPsd; });
    if (rank != 1) return false;
  }
  return true;
}

MajorizationOrder verify_spectral_bound(const DensityMatrix& rho, const Measurement& m) {
  if (m.dim() != rho.dim()) throw DomainError("measurement and state dimensions differ");
  if (!is_rank_one(m)) {
    throw DomainError("measurement '" + m.label() +
                      "' is not rank-1; the spectral bound does not apply");
  }
  return compare(born_probabilities(m, rho), spectrum_descending(rho).values);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return shannon_entropy(spectrum_descending(rho).values.entries());
}

}  // namespace majorbound
