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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "majorbound/cli/json_io.hpp"
#include "majorbound/conjugate_pair.hpp"

namespace majorbound::cli {

enum class Format { kJson, kCsv };

struct Settings {
  std::uint64_t seed = 42;
  int restarts = 64;
  int quad_order = kDefaultQuadOrder;
  double tolerance = 1e-10;  // search step tolerance
  unsigned threads = 0;
  Format format = Format::kJson;
};

inline const std::vector<std::string> kScenarios = {
    "mub2", "mub3", "mub2-pure-inf", "mub3-pure-inf", "conjugate-small-s", "theorem2-demo"};

/// One scenario: {"scenario", "rows": [{"quantity", "reference", "computed", "deviation"}]}.
Json reproduce_scenario(const std::string& name, const Settings& settings);

/// Runs the tool on `args` (without the program name). Returns 0 on success,
/// 1 on domain errors (bad values, malformed files), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace majorbound::cli
