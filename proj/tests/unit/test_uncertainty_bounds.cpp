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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "generators.hpp"
#include "majorbound/sampling.hpp"
#include "majorbound/uncertainty_bounds.hpp"

using namespace majorbound;
using Catch::Matchers::WithinAbs;

namespace {

const double kC2 = 1.0 / std::sqrt(2.0);
const double kC3 = 1.0 / std::sqrt(3.0);

SearchConfig quick_config(std::uint64_t seed = 42) {
  SearchConfig cfg;
  cfg.restarts = 16;
  cfg.seed = seed;
  return cfg;
}

double entropy_oracle(std::initializer_list<double> p) {
  double h = 0.0;
  for (double x : p) h -= x > 0 ? x * std::log(x) : 0.0;
  return h;
}

// Fourier basis of C^3 together with the computational basis: a qutrit MUB pair.
std::vector<Measurement> qutrit_mub_pair() {
  const double tau = 2.0 * std::acos(-1.0) / 3.0;
  std::vector<ComplexMatrix> comp, fourier;
  for (int k = 0; k < 3; ++k) {
    StateVector e = StateVector::Unit(3, k);
    comp.push_back(e * e.adjoint());
    StateVector f(3);
    for (int n = 0; n < 3; ++n) f[n] = std::polar(1.0 / std::sqrt(3.0), tau * k * n);
    fourier.push_back(f * f.adjoint());
  }
  return {Measurement("computational", comp), Measurement("fourier", fourier)};
}

}  // namespace

TEST_CASE("mu_sup_component for spin MUBs", "[bounds]") {
  const auto mub2 = preset_measurements("mub2");
  const auto mub3 = preset_measurements("mub3");
  const auto cfg = quick_config();

  const auto first = mu_sup_component(mub2, 1, cfg);
  REQUIRE_THAT(first.value, WithinAbs((1 + kC2) * (1 + kC2) / 4, 1e-9));
  const auto p = density_to_bloch(first.witness.state);
  REQUIRE_THAT(std::abs(p[0]), WithinAbs(kC2, 1e-4));
  REQUIRE_THAT(std::abs(p[1]), WithinAbs(kC2, 1e-4));
  REQUIRE_THAT(p[2], WithinAbs(0.0, 1e-4));

  const auto second = mu_sup_component(mub2, 2, cfg);
  REQUIRE_THAT(second.value, WithinAbs(1.0, 1e-9));
  const auto q = density_to_bloch(second.witness.state);
  REQUIRE_THAT(std::max(std::abs(q[0]), std::abs(q[1])), WithinAbs(1.0, 1e-4));

  REQUIRE_THAT(mu_sup_component(mub3, 1, cfg).value,
               WithinAbs(std::pow(1 + kC3, 3) / 8, 1e-9));
  REQUIRE_THAT(mu_sup_component(mub3, 2, cfg).value, WithinAbs((1 + kC2) * (1 + kC2) / 4, 1e-9));

  REQUIRE_THROWS_AS(mu_sup_component(mub2, 0, cfg), DomainError);
  REQUIRE_THROWS_AS(mu_sup_component(mub2, 5, cfg), DomainError);
}

TEST_CASE("supremum_bound", "[bounds]") {
  const auto cfg = quick_config();
  SECTION("two MUBs") {
    const auto r = supremum_bound(preset_measurements("mub2"), cfg);
    REQUIRE(r.bound.size() == 4);
    REQUIRE_THAT(r.bound[0], WithinAbs((1.5 + std::sqrt(2.0)) / 4, 1e-9));
    REQUIRE_THAT(r.bound[1], WithinAbs((2.5 - std::sqrt(2.0)) / 4, 1e-9));
    REQUIRE(r.bound[2] == 0.0);
    REQUIRE(r.bound[3] == 0.0);
    REQUIRE(is_uncertain(r.bound));
  }
  SECTION("three MUBs flatten components 3 and 4") {
    const auto r = supremum_bound(preset_measurements("mub3"), cfg);
    const std::vector<double> want{0.491, 0.238, 0.136, 0.136, 0, 0, 0, 0};
    REQUIRE(r.bound.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) REQUIRE_THAT(r.bound[i], WithinAbs(want[i], 1e-3));
    REQUIRE_THAT(r.bound[2], WithinAbs(r.bound[3], 1e-12));
    // Before flattening the third and fourth increments ascend.
    const auto inc = r.envelope.increments();
    REQUIRE(inc[2] < inc[3]);
  }
  SECTION("repeated measurement has a common eigenstate") {
    const auto r = supremum_bound(preset_measurements("xx"), cfg);
    REQUIRE_THAT(r.bound[0], WithinAbs(1.0, 1e-9));
    REQUIRE_FALSE(is_uncertain(r.bound));
  }
  SECTION("envelope is monotone and ends at 1") {
    const auto r = supremum_bound(qutrit_mub_pair(), cfg);
    const auto& mu = r.envelope.partial_sums;
    REQUIRE(mu.front() == 0.0);
    REQUIRE(mu.back() == 1.0);
    for (std::size_t j = 1; j < mu.size(); ++j) REQUIRE(mu[j] >= mu[j - 1]);
    REQUIRE(r.witnesses.size() == 9);
  }
}

TEST_CASE("infimum_bound", "[bounds]") {
  auto cfg = quick_config();
  SECTION("mixed states reach the uniform vector") {
    for (const char* name : {"mub2", "mub3"}) {
      const auto r = infimum_bound(preset_measurements(name), cfg);
      for (double x : r.bound) REQUIRE_THAT(x, WithinAbs(1.0 / static_cast<double>(r.bound.size()), 1e-9));
    }
  }
  SECTION("pure states, two MUBs: a sigma_z eigenstate is already uniform") {
    // |0> is pure and gives (1/4, 1/4, 1/4, 1/4) for sigma_x (+) sigma_y, so
    // the pure-state infimum cannot sit above the uniform vector.
    const auto mub2 = preset_measurements("mub2");
    const auto at_pole = joint_distribution(mub2, bloch_to_density({0, 0, 1}));
    for (double x : at_pole) REQUIRE_THAT(x, WithinAbs(0.25, 1e-15));
    cfg.pure_only = true;
    const auto r = infimum_bound(mub2, cfg);
    for (double x : r.bound) REQUIRE_THAT(x, WithinAbs(0.25, 1e-9));
  }
  SECTION("pure states, three MUBs") {
    cfg.pure_only = true;
    const auto r = infimum_bound(preset_measurements("mub3"), cfg);
    const std::vector<double> want{0.250, 0.250, 0.250, 0.104, 0.062, 0.040, 0.034, 0.011};
    for (std::size_t i = 0; i < 8; ++i) REQUIRE_THAT(r.bound[i], WithinAbs(want[i], 2e-3));
    for (std::size_t i = 1; i < 8; ++i) REQUIRE(r.bound[i] <= r.bound[i - 1] + 1e-9);
    for (const auto& w : r.witnesses) REQUIRE(std::isnan(w.mixed_value));
  }
}

TEST_CASE("quasi_entropic_uncertainty", "[bounds]") {
  const auto shannon = ConcaveMeasure::shannon();
  const std::vector<Measurement> x{spin_component_measurement(Axis::kX)};
  REQUIRE_THAT(quasi_entropic_uncertainty(shannon, x, bloch_to_density({1, 0, 0})),
               WithinAbs(0.0, 1e-15));

  const auto mub2 = preset_measurements("mub2");
  REQUIRE_THAT(quasi_entropic_uncertainty(shannon, mub2, bloch_to_density({0, 0, 0})),
               WithinAbs(std::log(4.0), 1e-12));

  const double a = (1 + kC2) * (1 + kC2) / 4;
  const double b = (1 + kC2) * (1 - kC2) / 4;
  const double c = (1 - kC2) * (1 - kC2) / 4;
  const double oracle = entropy_oracle({a, b, b, c});
  REQUIRE_THAT(oracle, WithinAbs(0.832991, 1e-6));
  REQUIRE_THAT(quasi_entropic_uncertainty(shannon, mub2, bloch_to_density({kC2, kC2, 0})),
               WithinAbs(oracle, 1e-12));

  REQUIRE_THROWS_AS(quasi_entropic_uncertainty(shannon, mub2, DensityMatrix::maximally_mixed(3)),
                    DomainError);
}

TEST_CASE("entropic_lower_bound", "[bounds]") {
  const auto cfg = quick_config();
  const auto shannon = ConcaveMeasure::shannon();
  REQUIRE_THAT(entropic_lower_bound(shannon, preset_measurements("mub3"), cfg),
               WithinAbs(1.23, 0.01));

  const double a = (1.5 + std::sqrt(2.0)) / 4;
  const double oracle = entropy_oracle({a, 1 - a});
  REQUIRE_THAT(oracle, WithinAbs(0.584692, 1e-6));
  REQUIRE_THAT(entropic_lower_bound(shannon, preset_measurements("mub2"), cfg),
               WithinAbs(oracle, 1e-9));

  for (const auto& F : {shannon, ConcaveMeasure::tsallis(0.5), ConcaveMeasure::tsallis(2.0)}) {
    REQUIRE_THAT(entropic_lower_bound(F, preset_measurements("xx"), cfg), WithinAbs(0.0, 1e-9));
  }
}

TEST_CASE("ConcaveMeasure", "[bounds]") {
  Rng rng(5);
  REQUIRE(concavity_violations(ConcaveMeasure::shannon(), 5, 500, rng) == 0);
  REQUIRE(concavity_violations(ConcaveMeasure::tsallis(0.5), 5, 500, rng) == 0);
  REQUIRE(concavity_violations(ConcaveMeasure::tsallis(2.0), 5, 500, rng) == 0);
  const auto convex = ConcaveMeasure::from_entry_function("square", [](double x) { return x * x; });
  REQUIRE(concavity_violations(convex, 5, 500, rng) > 0);

  REQUIRE(measure_from_name("shannon").name() == "shannon");
  REQUIRE_THAT(measure_from_name("tsallis:2")(ProbVec{0.5, 0.5}), WithinAbs(0.5, 1e-15));
  REQUIRE_THROWS_AS(measure_from_name("renyi:2"), DomainError);
  REQUIRE_THROWS_AS(measure_from_name("tsallis:x"), DomainError);
}

TEST_CASE("has_common_eigenstate", "[bounds]") {
  const auto xx = has_common_eigenstate(preset_measurements("xx"));
  REQUIRE(xx.has_value());
  REQUIRE_THAT(std::abs(xx->state[0]), WithinAbs(kC2, 1e-12));
  REQUIRE(std::abs(xx->state[0] - xx->state[1]) < 1e-12);

  REQUIRE_FALSE(has_common_eigenstate(preset_measurements("mub2")).has_value());
  REQUIRE_FALSE(has_common_eigenstate(preset_measurements("mub3")).has_value());

  ComplexMatrix e0 = ComplexMatrix::Zero(2, 2), e1 = ComplexMatrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  e1(1, 1) = 0.5;
  const std::vector<Measurement> diag{spin_component_measurement(Axis::kZ),
                                      Measurement("diag3", {e0, e1, e1})};
  const auto w = has_common_eigenstate(diag);
  REQUIRE(w.has_value());
  REQUIRE_THAT(std::abs(w->state[0]), WithinAbs(1.0, 1e-12));
  REQUIRE(w->outcomes == std::vector<std::size_t>{0, 0});

  SECTION("dichotomy with the supremum's leading component") {
    const auto cfg = quick_config();
    REQUIRE_THAT(supremum_bound(diag, cfg).bound[0], WithinAbs(1.0, 1e-9));
    REQUIRE(supremum_bound(preset_measurements("mub2"), cfg).bound[0] < 1.0 - 1e-3);
    REQUIRE_FALSE(has_common_eigenstate(qutrit_mub_pair()).has_value());
    REQUIRE(supremum_bound(qutrit_mub_pair(), cfg).bound[0] < 1.0 - 1e-3);
  }
}

TEST_CASE("bound properties", "[bounds][property]") {
  const auto shannon = ConcaveMeasure::shannon();
  const auto t05 = ConcaveMeasure::tsallis(0.5);
  const auto t2 = ConcaveMeasure::tsallis(2.0);

  for (const auto& ms : {preset_measurements("mub2"), preset_measurements("mub3"), qutrit_mub_pair()}) {
    const auto cfg = quick_config();
    const auto sup = supremum_bound(ms, cfg);
    const auto again = supremum_bound(ms, quick_config(12345));
    for (std::size_t i = 0; i < sup.bound.size(); ++i) {
      REQUIRE_THAT(again.bound[i], WithinAbs(sup.bound[i], 1e-6));
    }
    const double h_bound = entropic_lower_bound(shannon, sup);
    const double t05_bound = entropic_lower_bound(t05, sup);
    const double t2_bound = entropic_lower_bound(t2, sup);

    Rng rng(314);
    for (int t = 0; t < 200; ++t) {
      const auto rho = t % 2 ? random_density_matrix(ms.front().dim(), rng)
                             : DensityMatrix::from_pure(random_pure_vector(ms.front().dim(), rng));
      const auto joint = joint_distribution(ms, rho);
      const auto order = compare(joint, sup.bound);
      REQUIRE((order == MajorizationOrder::kStrictlyBelow || order == MajorizationOrder::kEquivalent));
      REQUIRE(quasi_entropic_uncertainty(shannon, ms, rho) >= h_bound - 1e-6);
      REQUIRE(quasi_entropic_uncertainty(t05, ms, rho) >= t05_bound - 1e-6);
      REQUIRE(quasi_entropic_uncertainty(t2, ms, rho) >= t2_bound - 1e-6);
    }
  }
}

TEST_CASE("SearchConfig validation", "[bounds]") {
  SearchConfig cfg;
  cfg.restarts = 0;
  REQUIRE_THROWS_AS(supremum_bound(preset_measurements("mub2"), cfg), DomainError);
  cfg = SearchConfig{};
  cfg.step_tolerance = 0.0;
  REQUIRE_THROWS_AS(supremum_bound(preset_measurements("mub2"), cfg), DomainError);
  REQUIRE_THROWS_AS(preset_measurements("mub7"), DomainError);
}

TEST_CASE("threaded restarts are deterministic", "[bounds]") {
  auto cfg = quick_config();
  cfg.threads = 1;
  const auto serial = supremum_bound(qutrit_mub_pair(), cfg);
  cfg.threads = 4;
  const auto threaded = supremum_bound(qutrit_mub_pair(), cfg);
  for (std::size_t i = 0; i < serial.bound.size(); ++i) REQUIRE(serial.bound[i] == threaded.bound[i]);
}
