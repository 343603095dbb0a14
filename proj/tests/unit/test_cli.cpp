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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "majorbound/cli/cli.hpp"

using majorbound::cli::Json;
using majorbound::cli::run;
using Catch::Matchers::WithinAbs;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(const std::vector<std::string>& args) {
  const auto r = invoke(args);
  INFO(r.err);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("majorbound_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

// Feeding a command's output back through --input reproduces it exactly.
void check_round_trip(const std::string& name, std::vector<std::string> args) {
  const auto first = invoke(args);
  INFO(first.err);
  REQUIRE(first.code == 0);
  const auto path = temp_file(name + ".json", first.out);
  const auto second = invoke({args.front(), "--input", path});
  INFO(second.err);
  REQUIRE(second.code == 0);
  REQUIRE(second.out == first.out);
}

}  // namespace

TEST_CASE("cli compare", "[cli]") {
  const auto j = invoke_json({"compare", "--a", "0.5,0.5", "--b", "1,0"});
  REQUIRE(j["order"] == "StrictlyBelow");
  REQUIRE(invoke_json({"compare", "--a", "[0.7,0.2,0.1]", "--b", "0.6,0.4"})["order"] == "Incomparable");
  const auto csv = invoke({"compare", "--a", "0.5,0.5", "--b", "1,0", "--format", "csv"});
  REQUIRE(csv.out == "order\nStrictlyBelow\n");
}

TEST_CASE("cli inf and sup", "[cli]") {
  const auto inf = invoke_json({"inf", "--vec", "0.6,0.2,0.2", "--vec", "0.5,0.45,0.05"});
  const std::vector<double> want_inf{0.5, 0.3, 0.2};
  for (std::size_t i = 0; i < 3; ++i) REQUIRE_THAT(inf["infimum"][i].get<double>(), WithinAbs(want_inf[i], 1e-12));
  const auto sup = invoke_json({"sup", "--vec", "0.6,0.2,0.2", "--vec", "0.5,0.45,0.05"});
  const std::vector<double> want_sup{0.6, 0.35, 0.05};
  for (std::size_t i = 0; i < 3; ++i) REQUIRE_THAT(sup["supremum"][i].get<double>(), WithinAbs(want_sup[i], 1e-12));
}

TEST_CASE("cli reproduce", "[cli]") {
  const auto j = invoke_json({"reproduce", "mub3", "--restarts", "16"});
  REQUIRE(j["scenario"] == "mub3");
  const auto& rows = j["rows"];
  REQUIRE(rows.size() == 9);
  for (const auto& r : rows) {
    if (r["quantity"].get<std::string>().starts_with("bound")) {
      REQUIRE(r["deviation"].get<double>() <= 1e-3 + 1e-12);
    }
    REQUIRE_THAT(r["deviation"].get<double>(),
                 WithinAbs(std::abs(r["computed"].get<double>() - r["reference"].get<double>()), 1e-15));
  }
  REQUIRE(rows[8]["quantity"] == "shannon_entropic_bound");
  REQUIRE_THAT(rows[8]["computed"].get<double>(), WithinAbs(1.23, 0.01));

  const auto small = invoke_json({"reproduce", "conjugate-small-s"});
  for (const auto& r : small["rows"]) REQUIRE(r["deviation"].get<double>() < 0.01);

  const auto demo = invoke_json({"reproduce", "theorem2-demo"});
  for (const auto& r : demo["rows"]) {
    if (r["quantity"] == "shannon_entropy(random_rank1_povm)") {
      REQUIRE(r["computed"].get<double>() >= r["reference"].get<double>());
    } else {
      REQUIRE(r["deviation"].get<double>() <= 1e-9);
    }
  }

  const auto bad = invoke({"reproduce", "mub9"});
  REQUIRE(bad.code == 1);
  REQUIRE(bad.err.find("unknown scenario") != std::string::npos);
}

TEST_CASE("cli conjugate", "[cli]") {
  const auto j = invoke_json({"conjugate", "--s", "0.01"});
  REQUIRE_THAT(j["leading_joint_probability"].get<double>(), WithinAbs(0.3025, 5e-4));
  REQUIRE_THAT(j["asymptote"].get<double>(), WithinAbs(0.30, 1e-12));
  REQUIRE(j["mu2"].size() == 8);

  const auto bins = invoke_json({"conjugate", "--delta-x", "0.5", "--delta-p", "0.25", "--hbar", "2"});
  REQUIRE_THAT(bins["s"].get<double>(), WithinAbs(0.125 / (4 * std::acos(-1.0)), 1e-15));

  const auto csv_path = (std::filesystem::temp_directory_path() / "majorbound_cli_eig.csv").string();
  REQUIRE(invoke({"conjugate", "--s", "1", "--quad-order", "32", "--eigenfunction-csv", csv_path}).code == 0);
  std::ifstream in(csv_path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  REQUIRE(lines == 33);

  REQUIRE(invoke({"conjugate", "--s", "1", "--delta-x", "1", "--delta-p", "1"}).code == 2);
  REQUIRE(invoke({"conjugate", "--delta-x", "1"}).code == 2);
  REQUIRE(invoke({"conjugate", "--s", "-1"}).code == 1);
  REQUIRE(invoke({"conjugate", "--s", "1", "--quad-order", "4"}).code == 2);
}

TEST_CASE("cli bound and entropic-bound", "[cli]") {
  const auto j = invoke_json({"bound", "--preset", "mub2", "--restarts", "8"});
  REQUIRE_THAT(j["bound"][0].get<double>(), WithinAbs((1.5 + std::sqrt(2.0)) / 4, 1e-9));
  REQUIRE(j["common_eigenstate"].is_null());
  REQUIRE(j["witnesses"].size() == 4);
  REQUIRE(j["witnesses"][0].contains("bloch"));
  REQUIRE(j["envelope"].size() == 5);

  const auto xx = invoke_json({"bound", "--preset", "xx", "--restarts", "8"});
  REQUIRE(xx["common_eigenstate"].is_object());
  REQUIRE(xx["common_eigenstate"]["dim"] == 2);

  const auto inf = invoke_json({"bound", "--preset", "mub3", "--kind", "inf", "--restarts", "8"});
  for (const auto& x : inf["bound"]) REQUIRE_THAT(x.get<double>(), WithinAbs(0.125, 1e-9));

  const auto e = invoke_json({"entropic-bound", "--preset", "mub2", "--restarts", "8"});
  REQUIRE_THAT(e["value"].get<double>(), WithinAbs(0.584692, 1e-6));
  const auto t = invoke_json({"entropic-bound", "--preset", "mub2", "--measure", "tsallis:2", "--restarts", "8"});
  const double a = (1.5 + std::sqrt(2.0)) / 4;
  REQUIRE_THAT(t["value"].get<double>(), WithinAbs(1 - a * a - (1 - a) * (1 - a), 1e-9));

  // Measurement files: a single measurement object works as a one-element set.
  const auto file = temp_file("sx.json", R"({"label": "sx", "elements": [[[0.5, 0.5], [0.5, 0.5]], [[0.5, -0.5], [-0.5, 0.5]]]})");
  const auto single = invoke_json({"bound", "--measurements", file, "--restarts", "4"});
  REQUIRE_THAT(single["bound"][0].get<double>(), WithinAbs(1.0, 1e-9));
}

TEST_CASE("cli least-uncertain", "[cli]") {
  const auto file = temp_file("state.json", R"({"dim": 2, "entries": [[[0.3, 0], [0, 0]], [[0, 0], [0.7, 0]]]})");
  const auto j = invoke_json({"least-uncertain", "--state", file});
  REQUIRE_THAT(j["spectrum"][0].get<double>(), WithinAbs(0.7, 1e-12));
  REQUIRE_THAT(j["von_neumann_entropy"].get<double>(), WithinAbs(0.6108643020548935, 1e-12));
  REQUIRE_THAT(j["projectors"][0][1][1][0].get<double>(), WithinAbs(1.0, 1e-12));

  const auto bad = temp_file("bad_state.json", R"({"dim": 2, "entries": [[[1.3, 0], [0, 0]], [[0, 0], [-0.3, 0]]]})");
  REQUIRE(invoke({"least-uncertain", "--state", bad}).code == 1);
  const auto broken = temp_file("broken.json", "{ not json");
  REQUIRE(invoke({"least-uncertain", "--state", broken}).code == 1);
  REQUIRE(invoke({"least-uncertain", "--state", "/nonexistent/state.json"}).code == 1);
}

TEST_CASE("cli exit codes", "[cli]") {
  REQUIRE(invoke({}).code == 2);
  REQUIRE(invoke({"frobnicate"}).code == 2);
  REQUIRE(invoke({"compare", "--a", "0.5,0.5"}).code == 2);
  REQUIRE(invoke({"compare", "--a", "0.5,0.6", "--b", "1"}).code == 1);
  REQUIRE(invoke({"compare", "--a", "0.5,abc", "--b", "1"}).code == 1);
  REQUIRE(invoke({"bound"}).code == 2);
  REQUIRE(invoke({"bound", "--preset", "mub7"}).code == 1);
  REQUIRE(invoke({"bound", "--preset", "mub2", "--format", "xml"}).code == 2);
  REQUIRE(invoke({"entropic-bound", "--preset", "mub2", "--measure", "renyi"}).code == 1);
  const auto help = invoke({"--help"});
  REQUIRE(help.code == 0);
  REQUIRE(help.out.find("reproduce") != std::string::npos);
}

TEST_CASE("cli determinism", "[cli]") {
  const std::vector<std::string> args{"bound", "--preset", "mub3", "--restarts", "8", "--seed", "7"};
  REQUIRE(invoke(args).out == invoke(args).out);
  const std::vector<std::string> threaded{"bound", "--preset", "mub3", "--restarts", "8", "--seed", "7", "--threads", "3"};
  REQUIRE(invoke(threaded).out == invoke(args).out);
}

TEST_CASE("cli round trip through --input", "[cli]") {
  check_round_trip("compare", {"compare", "--a", "0.5,0.3,0.2", "--b", "0.6,0.4"});
  check_round_trip("inf", {"inf", "--vec", "0.6,0.2,0.2", "--vec", "0.5,0.45,0.05"});
  check_round_trip("sup", {"sup", "--vec", "0.6,0.2,0.2", "--vec", "0.5,0.45,0.05"});
  check_round_trip("bound", {"bound", "--preset", "mub2", "--restarts", "6", "--seed", "3", "--kind", "inf", "--pure-only"});
  check_round_trip("bound3", {"bound", "--preset", "mub3", "--restarts", "6"});
  check_round_trip("entropic", {"entropic-bound", "--preset", "mub2", "--measure", "tsallis:0.5", "--restarts", "6"});
  check_round_trip("conjugate", {"conjugate", "--delta-x", "0.3", "--delta-p", "0.7", "--hbar", "1.5", "--quad-order", "48"});
  check_round_trip("reproduce", {"reproduce", "theorem2-demo", "--seed", "11"});

  const auto state = temp_file("rt_state.json", R"({"dim": 2, "entries": [[[0.6, 0], [0.1, -0.2]], [[0.1, 0.2], [0.4, 0]]]})");
  check_round_trip("least", {"least-uncertain", "--state", state});
  // The emitted projectors of least-uncertain form a valid measurement file.
  const auto j = invoke_json({"least-uncertain", "--state", state});
  const auto meas = temp_file("rt_meas.json", Json{{"label", "best"}, {"elements", j["projectors"]}}.dump());
  REQUIRE(invoke({"bound", "--measurements", meas, "--restarts", "4"}).code == 0);
}
