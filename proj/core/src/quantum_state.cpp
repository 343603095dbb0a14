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

#include "majorbound/quantum_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "majorbound/majorization.hpp"
#include "majorbound/tolerances.hpp"

namespace majorbound {

namespace {

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& a) {
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("Hermitian eigensolver failed");
  return solver.eigenvalues();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw DomainError("Hermitian eigensolver failed");
  Eigen::VectorXd ev = solver.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < -tol::kPsd) throw DomainError("psd_sqrt: matrix is not positive semidefinite");
    ev[i] = std::sqrt(std::max(ev[i], 0.0));
  }
  const auto& v = solver.eigenvectors();
  return v * ev.cast<Complex>().asDiagonal() * v.adjoint();
}

StateDiagnostics validate_state(const ComplexMatrix& m) {
  StateDiagnostics diag;
  if (m.rows() != m.cols() || m.rows() == 0) {
    diag.hermiticity_defect = std::numeric_limits<double>::infinity();
    diag.reason = "matrix is not square";
    return diag;
  }
  if (!m.allFinite()) {
    diag.hermiticity_defect = std::numeric_limits<double>::infinity();
    diag.reason = "matrix has non-finite entries";
    return diag;
  }
  diag.hermiticity_defect = hermiticity_defect(m);
  diag.min_eigenvalue = hermitian_eigenvalues(m).minCoeff();
  diag.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
  if (diag.hermiticity_defect > tol::kHerm) {
    diag.reason = "not Hermitian (defect " + fmt(diag.hermiticity_defect) + ")";
  } else if (diag.min_eigenvalue < -tol::kPsd) {
    diag.reason = "negative eigenvalue " + fmt(diag.min_eigenvalue);
  } else if (diag.trace_defect > tol::kSum) {
    diag.reason = "trace differs from 1 by " + fmt(diag.trace_defect);
  }
  diag.accepted = diag.reason.empty();
  return diag;
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  const auto diag = validate_state(m);
  if (!diag.accepted) throw DomainError("invalid density matrix: " + diag.reason);
  matrix_ = 0.5 * (m + m.adjoint());
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw DomainError("pure state vector has zero norm");
  const StateVector u = psi / norm;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index d) {
  if (d < 1) throw DomainError("dimension must be positive");
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

ComplexMatrix pauli(Axis axis) {
  ComplexMatrix s(2, 2);
  switch (axis) {
    case Axis::kX: s << 0.0, 1.0, 1.0, 0.0; break;
    case Axis::kY: s << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0; break;
    case Axis::kZ: s << 1.0, 0.0, 0.0, -1.0; break;
  }
  return s;
}

DensityMatrix bloch_to_density(const std::array<double, 3>& p) {
  const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  if (r > 1.0 + tol::kPsd) {
    throw DomainError("polarization vector has length " + fmt(r) + " > 1");
  }
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m += p[0] * pauli(Axis::kX) + p[1] * pauli(Axis::kY) + p[2] * pauli(Axis::kZ);
  return DensityMatrix(0.5 * m);
}

std::array<double, 3> density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DomainError("Bloch vector needs a qubit state");
  const auto& m = rho.matrix();
  return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

Measurement::Measurement(std::string label, std::vector<ComplexMatrix> elements,
                         std::vector<ComplexMatrix> operators)
    : label_(std::move(label)),
      elements_(std::move(elements)),
      operators_(std::move(operators)) {
  if (elements_.empty()) throw DomainError("measurement '" + label_ + "' has no elements");
  const Eigen::Index d = elements_.front().rows();
  if (d == 0) throw DomainError("measurement '" + label_ + "' has empty elements");
  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto& e = elements_[i];
    const std::string where = "measurement '" + label_ + "' element " + std::to_string(i);
    if (e.rows() != d || e.cols() != d) throw DomainError(where + " has the wrong shape");
    if (!e.allFinite()) throw DomainError(where + " has non-finite entries");
    if (hermiticity_defect(e) > tol::kHerm) throw DomainError(where + " is not Hermitian");
    e = 0.5 * (e + e.adjoint());
    const auto ev = hermitian_eigenvalues(e);
    if (ev.minCoeff() < -tol::kPsd) throw DomainError(where + " is not positive semidefinite");
    if (ev.maxCoeff() > 1.0 + tol::kPsd) throw DomainError(where + " has norm above 1");
    total += e;
  }
  const double defect = (total - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > tol::kComplete) {
    throw DomainError("measurement '" + label_ + "' elements do not sum to the identity (defect " +
                      fmt(defect) + ")");
  }
  if (!operators_.empty()) {
    if (operators_.size() != elements_.size()) {
      throw DomainError("measurement '" + label_ + "' has " + std::to_string(operators_.size()) +
                        " operators for " + std::to_string(elements_.size()) + " elements");
    }
    for (std::size_t i = 0; i < operators_.size(); ++i) {
      const auto& op = operators_[i];
      const std::string where = "measurement '" + label_ + "' operator " + std::to_string(i);
      if (op.rows() != d || op.cols() != d) throw DomainError(where + " has the wrong shape");
      const double mismatch = (op.adjoint() * op - elements_[i]).cwiseAbs().maxCoeff();
      if (mismatch > tol::kComplete) {
        throw DomainError(where + " does not square to its element (defect " + fmt(mismatch) + ")");
      }
    }
  }
}

ComplexMatrix Measurement::operator_for(std::size_t i) const {
  if (i >= elements_.size()) throw DomainError("outcome index out of range");
  if (has_operators()) return operators_[i];
  return psd_sqrt(elements_[i]);
}

Measurement spin_component_measurement(Axis axis) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix s = pauli(axis);
  const char* name = axis == Axis::kX ? "sigma_x" : axis == Axis::kY ? "sigma_y" : "sigma_z";
  return Measurement(name, {0.5 * (id + s), 0.5 * (id - s)});
}

void born_probabilities_raw(const Measurement& m, const ComplexMatrix& rho,
                            std::span<double> out) {
  const auto& es = m.elements();
  for (std::size_t i = 0; i < es.size(); ++i) {
    // Re tr(E rho) = Re sum_ij E_ij rho_ji
    out[i] = es[i].cwiseProduct(rho.transpose()).sum().real();
  }
}

ProbVec born_probabilities(const Measurement& m, const DensityMatrix& rho) {
  if (m.dim() != rho.dim()) {
    throw DomainError("measurement '" + m.label() + "' has dimension " +
                      std::to_string(m.dim()) + " but the state has " +
                      std::to_string(rho.dim()));
  }
  std::vector<double> p(m.outcome_count());
  born_probabilities_raw(m, rho.matrix(), p);
  double total = 0.0;
  for (double& x : p) {
    if (x < -tol::kPsd) throw DomainError("negative outcome probability " + fmt(x));
    x = std::max(x, 0.0);
    total += x;
  }
  for (double& x : p) x /= total;
  return ProbVec(std::move(p));
}

std::size_t joint_outcome_count(std::span<const Measurement> ms) {
  std::size_t n = 1;
  for (const auto& m : ms) n *= m.outcome_count();
  return n;
}

void require_dimension(std::span<const Measurement> ms, Eigen::Index d) {
  for (const auto& m : ms) {
    if (m.dim() != d) {
      throw DomainError("measurement '" + m.label() + "' has dimension " +
                        std::to_string(m.dim()) + ", expected " + std::to_string(d));
    }
  }
}

ProbVec joint_distribution(std::span<const Measurement> ms, const DensityMatrix& rho) {
  if (ms.empty()) throw DomainError("joint distribution of an empty measurement list");
  require_dimension(ms, rho.dim());
  std::vector<ProbVec> parts;
  parts.reserve(ms.size());
  for (const auto& m : ms) parts.push_back(born_probabilities(m, rho));
  return outer_product(parts);
}

DensityMatrix post_measurement_state(const ComplexMatrix& op, const DensityMatrix& rho) {
  if (op.rows() != rho.dim() || op.cols() != rho.dim()) {
    throw DomainError("measurement operator dimension does not match the state");
  }
  const ComplexMatrix unnormalized = op * rho.matrix() * op.adjoint();
  const double p = unnormalized.trace().real();
  if (p <= tol::kProb) {
    throw DomainError("outcome has probability " + fmt(p) + "; conditional state undefined");
  }
  return DensityMatrix(unnormalized / p);
}

DensityMatrix post_measurement_state(const Measurement& m, std::size_t outcome,
                                     const DensityMatrix& rho) {
  return post_measurement_state(m.operator_for(outcome), rho);
}

}  // namespace majorbound
