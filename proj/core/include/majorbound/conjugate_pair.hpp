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

#include <vector>

namespace majorbound {

/// Position/momentum bin widths. s = dx dp / (2 pi hbar) is the bin area in
/// units of phase-space cells. Bins are centered at x = 0 and p = 0.
class PhaseSpaceParams {
 public:
  PhaseSpaceParams(double delta_x, double delta_p, double hbar = 1.0);

  /// Square bins (dx = dp) with the given s.
  static PhaseSpaceParams from_s(double s, double hbar = 1.0);

  double delta_x() const noexcept { return delta_x_; }
  double delta_p() const noexcept { return delta_p_; }
  double hbar() const noexcept { return hbar_; }
  double s() const noexcept;

 private:
  double delta_x_;
  double delta_p_;
  double hbar_;
};

/// Eigenvalues mu^2 of the sinc-kernel operator on [-1/2, 1/2], descending,
/// with the leading eigenfunction sampled at the quadrature nodes
/// (normalized so that sum_i w_i f_i^2 = 1 and positive at the center).
struct KernelSpectrum {
  double s = 0.0;
  int quad_order = 0;
  std::vector<double> eigenvalues;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> leading_eigenfunction;

  double mu2_max() const { return eigenvalues.front(); }
};

inline constexpr int kDefaultQuadOrder = 128;
inline constexpr int kMinQuadOrder = 16;

/// sin(s pi (xi - xi')) / (pi (xi - xi')), equal to s on the diagonal.
double sinc_kernel(double s, double xi, double xi_prime);

/// Gauss-Legendre Nystrom discretization, symmetrized with sqrt(w_i w_j),
/// solved with a dense symmetric eigensolver. Eigenvalues within tol::kPsd
/// of [0, 1] are clipped into it; anything further out throws DomainError.
KernelSpectrum solve_spectrum(const PhaseSpaceParams& params, int quad_order = kDefaultQuadOrder);

/// (1 + mu_max)^2 / 4: the largest joint probability of one position bin and
/// one momentum bin.
double leading_joint_probability(const KernelSpectrum& spectrum);
double leading_joint_probability(const PhaseSpaceParams& params,
                                 int quad_order = kDefaultQuadOrder);

/// Small-bin limit (1 + 2 sqrt(s)) / 4.
double small_s_asymptote(double s);

/// Small-s optimal wavefunction in position space:
/// theta(dx^2 - 4x^2) / sqrt(2 dx) + sqrt(dp / (4 pi hbar)) sinc(x dp / (2 hbar)).
/// Intended for s <= kLimitWavefunctionMaxS.
double limit_wavefunction_position(double x, const PhaseSpaceParams& params);
/// Momentum-space counterpart (dx <-> dp, x <-> p).
double limit_wavefunction_momentum(double p, const PhaseSpaceParams& params);

inline constexpr double kLimitWavefunctionMaxS = 0.05;

}  // namespace majorbound
