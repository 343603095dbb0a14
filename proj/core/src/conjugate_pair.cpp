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

#include "majorbound/conjugate_pair.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "majorbound/prob_vec.hpp"
#include "majorbound/quadrature.hpp"
#include "majorbound/tolerances.hpp"

namespace majorbound {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double u) {
  if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

}  // namespace

PhaseSpaceParams::PhaseSpaceParams(double delta_x, double delta_p, double hbar)
    : delta_x_(delta_x), delta_p_(delta_p), hbar_(hbar) {
  if (!(delta_x > 0.0) || !(delta_p > 0.0) || !(hbar > 0.0) || !std::isfinite(delta_x) ||
      !std::isfinite(delta_p) || !std::isfinite(hbar)) {
    throw DomainError("bin widths and hbar must be positive and finite");
  }
}

PhaseSpaceParams PhaseSpaceParams::from_s(double s, double hbar) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("s must be positive and finite");
  const double width = std::sqrt(2.0 * kPi * hbar * s);
  return PhaseSpaceParams(width, width, hbar);
}

double PhaseSpaceParams::s() const noexcept {
  return delta_x_ * delta_p_ / (2.0 * kPi * hbar_);
}

double sinc_kernel(double s, double xi, double xi_prime) {
  return s * sinc(s * kPi * (xi - xi_prime));
}

KernelSpectrum solve_spectrum(const PhaseSpaceParams& params, int quad_order) {
  if (quad_order < kMinQuadOrder) {
    throw DomainError("quadrature order must be at least " + std::to_string(kMinQuadOrder));
  }
  const double s = params.s();
  const auto rule = gauss_legendre(quad_order, -0.5, 0.5);
  const Eigen::Index n = quad_order;

  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = std::sqrt(rule.weights[i] * rule.weights[j]) *
                       sinc_kernel(s, rule.nodes[i], rule.nodes[j]);
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw DomainError("kernel eigensolver failed");

  KernelSpectrum out;
  out.s = s;
  out.quad_order = quad_order;
  out.nodes = rule.nodes;
  out.weights = rule.weights;
  out.eigenvalues.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double mu2 = solver.eigenvalues()[n - 1 - k];
    if (mu2 < -tol::kPsd || mu2 > 1.0 + tol::kPsd) {
      throw DomainError("kernel eigenvalue " + std::to_string(mu2) + " outside [0, 1]");
    }
    out.eigenvalues[k] = std::clamp(mu2, 0.0, 1.0);
  }

  // Undo the symmetric scaling: f_i = v_i / sqrt(w_i).
  const Eigen::VectorXd v = solver.eigenvectors().col(n - 1);
  out.leading_eigenfunction.resize(n);
  double norm2 = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    out.leading_eigenfunction[i] = v[i] / std::sqrt(rule.weights[i]);
    norm2 += rule.weights[i] * out.leading_eigenfunction[i] * out.leading_eigenfunction[i];
  }
  const double sign = out.leading_eigenfunction[n / 2] < 0.0 ? -1.0 : 1.0;
  for (double& f : out.leading_eigenfunction) f *= sign / std::sqrt(norm2);
  return out;
}

double leading_joint_probability(const KernelSpectrum& spectrum) {
  const double mu = std::sqrt(spectrum.mu2_max());
  return 0.25 * (1.0 + mu) * (1.0 + mu);
}

double leading_joint_probability(const PhaseSpaceParams& params, int quad_order) {
  return leading_joint_probability(solve_spectrum(params, quad_order));
}

double small_s_asymptote(double s) {
  if (!(s > 0.0)) throw DomainError("s must be positive");
  return 0.25 * (1.0 + 2.0 * std::sqrt(s));
}

double limit_wavefunction_position(double x, const PhaseSpaceParams& params) {
  const double dx = params.delta_x();
  const double dp = params.delta_p();
  const double hbar = params.hbar();
  const double box = (dx * dx - 4.0 * x * x) > 0.0 ? 1.0 / std::sqrt(2.0 * dx) : 0.0;
  return box + std::sqrt(dp / (4.0 * kPi * hbar)) * sinc(x * dp / (2.0 * hbar));
}

double limit_wavefunction_momentum(double p, const PhaseSpaceParams& params) {
  const PhaseSpaceParams swapped(params.delta_p(), params.delta_x(), params.hbar());
  return limit_wavefunction_position(p, swapped);
}

}  // namespace majorbound
