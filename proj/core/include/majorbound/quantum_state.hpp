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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "majorbound/prob_vec.hpp"

namespace majorbound {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// max_ij |A_ij - conj(A_ji)|; infinite for non-square input.
double hermiticity_defect(const ComplexMatrix& a);

/// Eigenvalues of the Hermitian part of `a`, ascending.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& a);

/// Principal square root of a PSD matrix (negative eigenvalues within
/// tol::kPsd are treated as zero).
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

struct StateDiagnostics {
  double hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
  double trace_defect = 0.0;
  bool accepted = false;
  std::string reason;  // empty when accepted
};

/// Checks a candidate density matrix without throwing.
StateDiagnostics validate_state(const ComplexMatrix& m);

/// Hermitian, PSD, unit-trace d x d matrix.
class DensityMatrix {
 public:
  /// Throws DomainError when validate_state rejects `m`. The stored matrix is
  /// the Hermitian part of `m`.
  explicit DensityMatrix(const ComplexMatrix& m);

  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(Eigen::Index d);

  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// (I + p . sigma) / 2 for a polarization vector with |p| <= 1.
DensityMatrix bloch_to_density(const std::array<double, 3>& p);
/// Inverse of bloch_to_density; requires a qubit state.
std::array<double, 3> density_to_bloch(const DensityMatrix& rho);

enum class Axis { kX, kY, kZ };

/// Pauli matrix for the axis.
ComplexMatrix pauli(Axis axis);

/// A generalized measurement: ordered POVM elements summing to the identity,
/// optionally with measurement operators M satisfying M^dagger M = E.
class Measurement {
 public:
  Measurement(std::string label, std::vector<ComplexMatrix> elements,
              std::vector<ComplexMatrix> operators = {});

  const std::string& label() const noexcept { return label_; }
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
  bool has_operators() const noexcept { return !operators_.empty(); }
  std::size_t outcome_count() const noexcept { return elements_.size(); }
  Eigen::Index dim() const noexcept { return elements_.front().rows(); }

  /// The supplied operator for outcome i, else sqrt(E_i).
  ComplexMatrix operator_for(std::size_t i) const;

 private:
  std::string label_;
  std::vector<ComplexMatrix> elements_;
  std::vector<ComplexMatrix> operators_;
};

/// Projective measurement {(I + sigma)/2, (I - sigma)/2}.
Measurement spin_component_measurement(Axis axis);

/// Outcome probabilities Re tr(E_i rho). Slightly negative values (within
/// tol::kPsd) are clamped to zero and the vector is renormalized.
ProbVec born_probabilities(const Measurement& m, const DensityMatrix& rho);

/// Outer product of the individual outcome distributions, first measurement
/// slowest. This is the statistics of independent runs on copies of rho, not
/// a simultaneous measurement.
ProbVec joint_distribution(std::span<const Measurement> ms, const DensityMatrix& rho);

/// M rho M^dagger / tr(M rho M^dagger). Throws DomainError when the outcome
/// probability is below tol::kProb.
DensityMatrix post_measurement_state(const ComplexMatrix& op, const DensityMatrix& rho);
DensityMatrix post_measurement_state(const Measurement& m, std::size_t outcome,
                                     const DensityMatrix& rho);

/// Raw Born probabilities without validation or clamping, written to `out`
/// (length = outcome count). Used in inner search loops.
void born_probabilities_raw(const Measurement& m, const ComplexMatrix& rho,
                            std::span<double> out);

/// Total outcome count of the joint distribution.
std::size_t joint_outcome_count(std::span<const Measurement> ms);

/// Throws DomainError unless all measurements share dimension `d`.
void require_dimension(std::span<const Measurement> ms, Eigen::Index d);

}  // namespace majorbound
