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

#include <cmath>

#include "majorbound/cli/cli.hpp"
#include "majorbound/conjugate_pair.hpp"
#include "majorbound/sampling.hpp"

namespace majorbound::cli {

namespace {

struct Rows {
  Json json = Json::array();

  void add(const std::string& quantity, double reference, double computed) {
    json.push_back({{"quantity", quantity},
                    {"reference", reference},
                    {"computed", computed},
                    {"deviation", std::abs(computed - reference)}});
  }

  void add_vector(const std::string& name, const std::vector<double>& reference,
                  const ProbVec& computed) {
    for (std::size_t i = 0; i < reference.size(); ++i) {
      add(name + "[" + std::to_string(i + 1) + "]", reference[i], computed[i]);
    }
  }
};

SearchConfig search_config(const Settings& s, bool pure_only) {
  SearchConfig cfg;
  cfg.seed = s.seed;
  cfg.restarts = s.restarts;
  cfg.step_tolerance = s.tolerance;
  cfg.threads = s.threads;
  cfg.pure_only = pure_only;
  return cfg;
}

Json mub2(const Settings& s) {
  Rows rows;
  const auto r = supremum_bound(preset_measurements("mub2"), search_config(s, false));
  const double a = (1.5 + std::sqrt(2.0)) / 4.0;
  rows.add_vector("bound", {a, 1.0 - a, 0.0, 0.0}, r.bound);
  return rows.json;
}

Json mub3(const Settings& s) {
  Rows rows;
  const auto r = supremum_bound(preset_measurements("mub3"), search_config(s, false));
  rows.add_vector("bound", {0.491, 0.238, 0.136, 0.136, 0, 0, 0, 0}, r.bound);
  rows.add("shannon_entropic_bound", 1.23, entropic_lower_bound(ConcaveMeasure::shannon(), r));
  return rows.json;
}

Json pure_inf(const Settings& s, const std::string& preset, const std::vector<double>& reference) {
  Rows rows;
  const auto ms = preset_measurements(preset);
  rows.add_vector("pure_infimum", reference, infimum_bound(ms, search_config(s, true)).bound);
  const auto mixed = infimum_bound(ms, search_config(s, false)).bound;
  rows.add_vector("mixed_infimum", std::vector<double>(mixed.size(), 1.0 / mixed.size()), mixed);
  return rows.json;
}

Json conjugate_small_s(const Settings& s) {
  Rows rows;
  for (double x : {0.01, 0.005, 0.001, 1e-4}) {
    const auto sp = solve_spectrum(PhaseSpaceParams::from_s(x), s.quad_order);
    const std::string tag = "(s=" + Json(x).dump() + ")";
    rows.add("mu2_max/s" + tag, 1.0, sp.mu2_max() / x);
    rows.add("leading_joint_probability" + tag, small_s_asymptote(x), leading_joint_probability(sp));
  }
  rows.add("leading_joint_probability(s=1e-06)", 0.25,
           leading_joint_probability(PhaseSpaceParams::from_s(1e-6), s.quad_order));
  return rows.json;
}

Json spectral_demo(const Settings& s) {
  Rows rows;
  Rng rng(derive_seed(s.seed, 2));
  const auto rho = random_density_matrix(3, rng);
  const auto lambda = spectrum_descending(rho).values;
  const auto best = born_probabilities(least_uncertain_measurement(rho), rho);
  rows.add_vector("least_uncertain_probability", lambda.values(), best);
  const double entropy = von_neumann_entropy(rho);
  rows.add("shannon_entropy(least_uncertain)", entropy, shannon_entropy(best.entries()));
  const auto povm = random_rank_one_povm(3, 5, rng);
  // Any other rank-1 measurement is at least as uncertain: computed >= reference.
  rows.add("shannon_entropy(random_rank1_povm)", entropy,
           shannon_entropy(born_probabilities(povm, rho).entries()));
  return rows.json;
}

}  // namespace

Json reproduce_scenario(const std::string& name, const Settings& settings) {
  Json rows;
  if (name == "mub2") {
    rows = mub2(settings);
  } else if (name == "mub3") {
    rows = mub3(settings);
  } else if (name == "mub2-pure-inf") {
    rows = pure_inf(settings, "mub2", {0.5, 0.5, 0.0, 0.0});
  } else if (name == "mub3-pure-inf") {
    rows = pure_inf(settings, "mub3", {0.250, 0.250, 0.250, 0.104, 0.062, 0.040, 0.034, 0.011});
  } else if (name == "conjugate-small-s") {
    rows = conjugate_small_s(settings);
  } else if (name == "theorem2-demo") {
    rows = spectral_demo(settings);
  } else {
    throw DomainError("unknown scenario '" + name + "'");
  }
  return Json{{"scenario", name}, {"rows", std::move(rows)}};
}

}  // namespace majorbound::cli
