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

#include "majorbound/state_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include "majorbound/sampling.hpp"

namespace majorbound {

void validate(const SearchConfig& cfg) {
  if (cfg.restarts < 1) throw DomainError("search needs at least one restart");
  if (cfg.max_iterations < 1) throw DomainError("search needs at least one iteration");
  if (!(cfg.step_tolerance > 0.0)) throw DomainError("step tolerance must be positive");
}

double top_sum(std::span<const double> p, std::size_t j) {
  std::vector<double> v(p.begin(), p.end());
  j = std::min(j, v.size());
  std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j), v.end(),
                    std::greater<>());
  double s = 0.0;
  for (std::size_t i = 0; i < j; ++i) s += v[i];
  return s;
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegree = kPi / 180.0;
constexpr double kGridStepDegrees = 2.0;
constexpr int kRadialSteps = 20;
constexpr std::size_t kGridCandidates = 4;
constexpr double kTieSlack = 1e-12;

enum class Family { kPure, kMixed };

/// Sorted prefix sums of the joint distribution for a raw density matrix.
class JointEvaluator {
 public:
  explicit JointEvaluator(std::span<const Measurement> ms)
      : ms_(ms.begin(), ms.end()), total_(joint_outcome_count(ms)) {}

  std::size_t outcomes() const { return total_; }

  /// Writes partial sums (leading 0, length D + 1) into `prefix`.
  void prefix_sums(const ComplexMatrix& rho, std::vector<double>& prefix) const {
    thread_local std::vector<double> joint, next, single;
    joint.assign(1, 1.0);
    for (const auto& m : ms_) {
      single.resize(m.outcome_count());
      born_probabilities_raw(m, rho, single);
      next.clear();
      for (double a : joint) {
        for (double b : single) next.push_back(a * b);
      }
      joint.swap(next);
    }
    std::sort(joint.begin(), joint.end(), std::greater<>());
    prefix.resize(joint.size() + 1);
    prefix[0] = 0.0;
    for (std::size_t i = 0; i < joint.size(); ++i) prefix[i + 1] = prefix[i] + joint[i];
  }

  double top(const ComplexMatrix& rho, std::size_t j) const {
    thread_local std::vector<double> prefix;
    prefix_sums(rho, prefix);
    return prefix[j];
  }

 private:
  std::vector<Measurement> ms_;
  std::size_t total_;
};

bool better(double candidate, double incumbent, Goal goal) {
  return goal == Goal::kMaximize ? candidate > incumbent + kTieSlack
                                 : candidate < incumbent - kTieSlack;
}

double worst(Goal goal) {
  return goal == Goal::kMaximize ? -std::numeric_limits<double>::infinity()
                                 : std::numeric_limits<double>::infinity();
}

// ---- sphere parametrizations ------------------------------------------------

Eigen::Index parameter_count(Family family, Eigen::Index d) {
  return family == Family::kPure ? 2 * d : 2 * d * d;
}

ComplexMatrix state_from_point(const Eigen::VectorXd& x, Family family, Eigen::Index d) {
  if (family == Family::kPure) {
    StateVector psi(d);
    for (Eigen::Index k = 0; k < d; ++k) psi[k] = Complex(x[2 * k], x[2 * k + 1]);
    return psi * psi.adjoint();
  }
  ComplexMatrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) {
      const Eigen::Index idx = 2 * (i * d + k);
      a(i, k) = Complex(x[idx], x[idx + 1]);
    }
  }
  return a * a.adjoint();
}

Eigen::VectorXd point_from_vector(const StateVector& psi, Family family) {
  const Eigen::Index d = psi.size();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(parameter_count(family, d));
  for (Eigen::Index i = 0; i < d; ++i) {
    // Mixed: A has psi as its first column.
    const Eigen::Index idx = family == Family::kPure ? 2 * i : 2 * (i * d);
    x[idx] = psi[i].real();
    x[idx + 1] = psi[i].imag();
  }
  return x / x.norm();
}

Eigen::VectorXd maximally_mixed_point(Eigen::Index d) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(2 * d * d);
  for (Eigen::Index i = 0; i < d; ++i) x[2 * (i * d + i)] = 1.0;
  return x / x.norm();
}

struct LocalResult {
  double value = 0.0;
  Eigen::VectorXd x;
  bool converged = false;
};

/// Projected-gradient ascent of f on the unit sphere with central-difference
/// gradients and step halving.
LocalResult ascend(const std::function<double(const Eigen::VectorXd&)>& f, Eigen::VectorXd x,
                   const SearchConfig& cfg) {
  constexpr double kGradientStep = 1e-6;
  x.normalize();
  double fx = f(x);
  double step = 0.25;
  const Eigen::Index n = x.size();
  Eigen::VectorXd grad(n);
  Eigen::VectorXd probe(n);
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    for (Eigen::Index i = 0; i < n; ++i) {
      probe = x;
      probe[i] += kGradientStep;
      const double up = f(probe / probe.norm());
      probe[i] = x[i] - kGradientStep;
      const double down = f(probe / probe.norm());
      grad[i] = (up - down) / (2.0 * kGradientStep);
    }
    grad -= grad.dot(x) * x;
    const double gnorm = grad.norm();
    if (!(gnorm > 1e-14)) return {fx, x, true};
    const Eigen::VectorXd dir = grad / gnorm;
    for (;;) {
      probe = x + step * dir;
      probe.normalize();
      const double fp = f(probe);
      if (fp > fx) {
        x = probe;
        fx = fp;
        step = std::min(2.0 * step, 1.0);
        break;
      }
      step *= 0.5;
      if (step < cfg.step_tolerance) return {fx, x, true};
    }
  }
  return {fx, x, false};
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

struct FamilyResult {
  double value;
  ComplexMatrix rho;
  bool converged;
};

/// Multistart over one state family for one j.
FamilyResult multistart(const JointEvaluator& eval, std::span<const Measurement> ms,
                        std::size_t j, Family family, Goal goal, const SearchConfig& cfg) {
  const Eigen::Index d = ms.front().dim();
  const double sign = goal == Goal::kMaximize ? 1.0 : -1.0;

  std::vector<Eigen::VectorXd> starts;
  if (family == Family::kMixed) starts.push_back(maximally_mixed_point(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    starts.push_back(point_from_vector(StateVector::Unit(d, k), family));
  }
  for (const auto& m : ms) {
    for (const auto& e : m.elements()) {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(e);
      for (Eigen::Index k = 0; k < d; ++k) {
        starts.push_back(point_from_vector(solver.eigenvectors().col(k), family));
      }
    }
  }
  const auto n = parameter_count(family, d);
  const std::uint64_t stream =
      (static_cast<std::uint64_t>(j) << 8) | (family == Family::kPure ? 0u : 1u) |
      (goal == Goal::kMaximize ? 0u : 2u);
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(derive_seed(derive_seed(cfg.seed, stream), static_cast<std::uint64_t>(r)));
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = normal(rng);
    starts.push_back(x / x.norm());
  }

  auto objective = [&](const Eigen::VectorXd& x) {
    return sign * eval.top(state_from_point(x, family, d), j);
  };
  std::vector<LocalResult> results(starts.size());
  parallel_for(starts.size(), cfg.threads,
               [&](std::size_t i) { results[i] = ascend(objective, starts[i], cfg); });

  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value > results[best].value + kTieSlack) best = i;
  }
  bool any_converged = false;
  for (const auto& r : results) any_converged = any_converged || r.converged;
  return {sign * results[best].value, state_from_point(results[best].x, family, d),
          any_converged};
}

// ---- qubit Bloch grid -------------------------------------------------------

ComplexMatrix bloch_matrix(double r, double theta, double phi) {
  r = std::clamp(r, 0.0, 1.0);
  const double px = r * std::sin(theta) * std::cos(phi);
  const double py = r * std::sin(theta) * std::sin(phi);
  const double pz = r * std::cos(theta);
  ComplexMatrix m(2, 2);
  m << 0.5 * (1.0 + pz), Complex(0.5 * px, -0.5 * py), Complex(0.5 * px, 0.5 * py),
      0.5 * (1.0 - pz);
  return m;
}

struct GridPoint {
  double value;
  double r, theta, phi;
};

/// Keeps the best few grid points per j.
class CandidateTable {
 public:
  CandidateTable(std::size_t slots, Goal goal) : goal_(goal), table_(slots) {}

  void offer(std::size_t j, const GridPoint& p) {
    auto& list = table_[j];
    auto pos = std::find_if(list.begin(), list.end(),
                            [&](const GridPoint& q) { return better(p.value, q.value, goal_); });
    if (pos == list.end() && list.size() >= kGridCandidates) return;
    list.insert(pos, p);
    if (list.size() > kGridCandidates) list.pop_back();
  }

  const std::vector<GridPoint>& at(std::size_t j) const { return table_[j]; }

 private:
  Goal goal_;
  std::vector<std::vector<GridPoint>> table_;
};

CandidateTable bloch_grid(const JointEvaluator& eval, Family family, Goal goal) {
  const std::size_t total = eval.outcomes();
  CandidateTable table(total + 1, goal);
  std::vector<double> prefix;
  const int theta_steps = static_cast<int>(std::lround(180.0 / kGridStepDegrees));
  const int phi_steps = static_cast<int>(std::lround(360.0 / kGridStepDegrees));
  const int r_first = family == Family::kPure ? kRadialSteps : 0;
  for (int ri = r_first; ri <= kRadialSteps; ++ri) {
    const double r = static_cast<double>(ri) / kRadialSteps;
    for (int ti = 0; ti <= theta_steps; ++ti) {
      const double theta = ti * kGridStepDegrees * kDegree;
      // The poles and the center need only one azimuth.
      const int phis = (ti == 0 || ti == theta_steps || ri == 0) ? 1 : phi_steps;
      for (int pi = 0; pi < phis; ++pi) {
        const double phi = pi * kGridStepDegrees * kDegree;
        eval.prefix_sums(bloch_matrix(r, theta, phi), prefix);
        for (std::size_t j = 1; j <= total; ++j) table.offer(j, {prefix[j], r, theta, phi});
      }
      if (ri == 0) break;
    }
  }
  return table;
}

/// Shrinking local grid around a starting point; handles the kinks of top-j
/// sums, where gradient steps stall.
GridPoint zoom(const JointEvaluator& eval, std::size_t j, Family family, Goal goal,
               GridPoint start) {
  constexpr int kHalf = 4;  // 9 points per axis
  constexpr double kStopWidth = 1e-10;
  double angle_width = kGridStepDegrees * kDegree;
  double radial_width = 1.0 / kRadialSteps;
  GridPoint best = start;
  while (angle_width > kStopWidth) {
    GridPoint round_best = best;
    const int r_span = family == Family::kPure ? 0 : kHalf;
    for (int a = -r_span; a <= r_span; ++a) {
      const double r = std::clamp(best.r + a * radial_width / kHalf, 0.0, 1.0);
      for (int b = -kHalf; b <= kHalf; ++b) {
        const double theta = best.theta + b * angle_width / kHalf;
        for (int c = -kHalf; c <= kHalf; ++c) {
          const double phi = best.phi + c * angle_width / kHalf;
          const double v = eval.top(bloch_matrix(r, theta, phi), j);
          if (better(v, round_best.value, goal)) round_best = {v, r, theta, phi};
        }
      }
    }
    best = round_best;
    angle_width *= 0.5;
    radial_width *= 0.5;
  }
  return best;
}

struct Candidate {
  double value;
  ComplexMatrix rho;
  std::string method;
  bool converged;
  Family family;
};

SearchOutcome pick(const std::vector<Candidate>& cands, Goal goal) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    if (better(cands[i].value, cands[best].value, goal)) best = i;
  }
  double pure = worst(goal);
  double mixed = worst(goal);
  bool any_mixed = false;
  for (const auto& c : cands) {
    double& slot = c.family == Family::kPure ? pure : mixed;
    if (c.family == Family::kMixed) any_mixed = true;
    if (better(c.value, slot, goal)) slot = c.value;
  }
  const auto& w = cands[best];
  SearchOutcome out;
  out.value = w.value;
  out.state = DensityMatrix(0.5 * (w.rho + w.rho.adjoint()) / w.rho.trace().real());
  out.method = w.method;
  out.converged = w.converged;
  out.pure_value = pure;
  out.mixed_value = any_mixed ? mixed : std::numeric_limits<double>::quiet_NaN();
  return out;
}

bool all_qubits(std::span<const Measurement> ms) {
  return std::all_of(ms.begin(), ms.end(), [](const Measurement& m) { return m.dim() == 2; });
}

std::vector<SearchOutcome> run_search(std::span<const Measurement> ms,
                                      std::span<const std::size_t> js, Goal goal,
                                      const SearchConfig& cfg) {
  validate(cfg);
  if (ms.empty()) throw DomainError("search needs at least one measurement");
  const Eigen::Index d = ms.front().dim();
  require_dimension(ms, d);
  const JointEvaluator eval(ms);
  const std::size_t total = eval.outcomes();
  for (std::size_t j : js) {
    if (j < 1 || j > total) {
      throw DomainError("component index " + std::to_string(j) + " outside 1.." +
                        std::to_string(total));
    }
  }

  std::vector<Family> families{Family::kPure};
  if (!cfg.pure_only) families.push_back(Family::kMixed);

  const bool qubit = all_qubits(ms);
  std::vector<CandidateTable> grids;
  if (qubit) {
    for (Family f : families) grids.push_back(bloch_grid(eval, f, goal));
  }

  std::vector<SearchOutcome> outcomes;
  outcomes.reserve(js.size());
  for (std::size_t j : js) {
    std::vector<Candidate> cands;
    if (j == total) {
      // Every state puts total mass 1 on the full joint distribution.
      ComplexMatrix basis_state = ComplexMatrix::Zero(d, d);
      basis_state(0, 0) = 1.0;
      cands.push_back({1.0, basis_state, "exact", true, Family::kPure});
      if (!cfg.pure_only) {
        cands.push_back({1.0, ComplexMatrix::Identity(d, d) / static_cast<double>(d), "exact", true,
                         Family::kMixed});
      }
      outcomes.push_back(pick(cands, goal));
      continue;
    }
    if (qubit) {
      for (std::size_t f = 0; f < families.size(); ++f) {
        GridPoint best{worst(goal), 1.0, 0.0, 0.0};
        for (const auto& start : grids[f].at(j)) {
          const GridPoint refined = zoom(eval, j, families[f], goal, start);
          if (better(refined.value, best.value, goal)) best = refined;
        }
        cands.push_back({best.value, bloch_matrix(best.r, best.theta, best.phi),
                         families[f] == Family::kPure ? "bloch-grid-pure" : "bloch-grid-mixed",
                         true, families[f]});
      }
    }
    for (Family f : families) {
      const auto res = multistart(eval, ms, j, f, goal, cfg);
      cands.push_back({res.value, res.rho,
                       f == Family::kPure ? "sphere-gradient-pure" : "sphere-gradient-mixed",
                       res.converged, f});
    }
    outcomes.push_back(pick(cands, goal));
  }
  return outcomes;
}

}  // namespace

std::vector<SearchOutcome> optimize_top_sums(std::span<const Measurement> ms, Goal goal,
                                             const SearchConfig& cfg) {
  std::vector<std::size_t> js(joint_outcome_count(ms));
  for (std::size_t j = 0; j < js.size(); ++j) js[j] = j + 1;
  return run_search(ms, js, goal, cfg);
}

SearchOutcome optimize_top_sum(std::span<const Measurement> ms, std::size_t j, Goal goal,
                               const SearchConfig& cfg) {
  const std::size_t js[] = {j};
  return run_search(ms, js, goal, cfg).front();
}

}  // namespace majorbound
