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

#include "majorbound/sampling.hpp"

#include <cmath>

#include "majorbound/tolerances.hpp"

namespace majorbound {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

ComplexMatrix haar_unitary(Eigen::Index d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i) {
    const Complex rii = r(i, i);
    const double mag = std::abs(rii);
    if (mag > 0.0) q.col(i) *= rii / mag;
  }
  return q;
}

StateVector random_pure_vector(Eigen::Index d, Rng& rng) {
  StateVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

DensityMatrix random_density_matrix(Eigen::Index d, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd lambda(d);
  for (Eigen::Index i = 0; i < d; ++i) lambda[i] = expo(rng);
  lambda /= lambda.sum();
  const ComplexMatrix u = haar_unitary(d, rng);
  const ComplexMatrix rho = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

Measurement random_rank_one_povm(Eigen::Index d, std::size_t outcomes, Rng& rng) {
  if (outcomes < static_cast<std::size_t>(d)) {
    throw DomainError("a rank-1 POVM needs at least d outcomes");
  }
  std::vector<StateVector> vs;
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  // Redraw in the (measure-zero) event that the vectors do not span C^d.
  for (;;) {
    vs.clear();
    s.setZero();
    for (std::size_t k = 0; k < outcomes; ++k) {
      vs.push_back(random_pure_vector(d, rng));
      s += vs.back() * vs.back().adjoint();
    }
    if (hermitian_eigenvalues(s).minCoeff() > 1e-6) break;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (s + s.adjoint()));
  const Eigen::VectorXd inv_sqrt = solver.eigenvalues().cwiseSqrt().cwiseInverse();
  const ComplexMatrix s_inv_sqrt =
      solver.eigenvectors() * inv_sqrt.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();

  std::vector<ComplexMatrix> elements;
  elements.reserve(outcomes);
  for (const auto& v : vs) {
    const StateVector w = s_inv_sqrt * v;
    elements.push_back(w * w.adjoint());
  }
  return Measurement("random_rank1_povm", std::move(elements));
}

}  // namespace majorbound
