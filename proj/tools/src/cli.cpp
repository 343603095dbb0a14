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

#include "majorbound/cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "majorbound/conjugate_pair.hpp"

namespace majorbound::cli {

namespace {

// Missing or conflicting arguments detected after parsing; exit code 2.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

using CsvTable = std::vector<std::vector<std::string>>;

struct Output {
  Json json;
  CsvTable csv;
};

std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<std::string> num_row(std::initializer_list<double> xs) {
  std::vector<std::string> row;
  for (double x : xs) row.push_back(num(x));
  return row;
}

void write_csv(const CsvTable& table, std::ostream& out) {
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

// Shared state for the handlers: parsed flags plus the optional --input document.
struct Context {
  Settings settings;
  Json input = Json::object();
  bool seed_given = false;
  bool restarts_given = false;
  bool quad_order_given = false;

  bool has(const char* key) const { return input.is_object() && input.contains(key); }

  // Input-file values apply unless the flag was given explicitly.
  SearchConfig search_config(bool pure_only) {
    if (!seed_given && has("seed")) settings.seed = input["seed"].get<std::uint64_t>();
    if (!restarts_given && has("restarts")) settings.restarts = input["restarts"].get<int>();
    SearchConfig cfg;
    cfg.seed = settings.seed;
    cfg.restarts = settings.restarts;
    cfg.step_tolerance = settings.tolerance;
    cfg.threads = settings.threads;
    cfg.pure_only = pure_only;
    return cfg;
  }
};

ProbVec vector_arg(const Context& ctx, const std::string& flag_value, const char* key) {
  if (!flag_value.empty()) return parse_prob_vec(flag_value);
  if (ctx.has(key)) return prob_vec_from_json(ctx.input[key]);
  throw UsageError(std::string("missing --") + key);
}

Output compare_cmd(const Context& ctx, const std::string& a_text, const std::string& b_text) {
  const auto a = vector_arg(ctx, a_text, "a");
  const auto b = vector_arg(ctx, b_text, "b");
  const auto order = std::string(to_string(compare(a, b)));
  return {Json{{"a", a.values()}, {"b", b.values()}, {"order", order}}, {{"order"}, {order}}};
}

Output envelope_cmd(const Context& ctx, const std::vector<std::string>& texts, bool upper) {
  std::vector<ProbVec> vs;
  for (const auto& t : texts) vs.push_back(parse_prob_vec(t));
  if (vs.empty() && ctx.has("inputs")) {
    for (const auto& v : ctx.input["inputs"]) vs.push_back(prob_vec_from_json(v));
  }
  if (vs.empty()) throw UsageError("give at least one --vec");
  const auto result = upper ? supremum(vs) : infimum(vs);
  Json inputs = Json::array();
  for (const auto& v : vs) inputs.push_back(v.values());
  std::vector<std::string> row;
  for (double x : result) row.push_back(num(x));
  return {Json{{"inputs", std::move(inputs)}, {upper ? "supremum" : "infimum", result.values()}},
          {row}};
}

std::vector<Measurement> measurement_arg(const Context& ctx, const std::string& preset,
                                         const std::string& file) {
  if (!preset.empty() && !file.empty()) throw UsageError("--preset and --measurements are exclusive");
  if (!preset.empty()) return preset_measurements(preset);
  if (!file.empty()) return measurements_from_json(read_json_file(file));
  if (ctx.has("measurements")) return measurements_from_json(ctx.input["measurements"]);
  throw UsageError("give --preset, --measurements or --input");
}

Output bound_cmd(Context& ctx, const std::vector<Measurement>& ms, std::string kind,
                 bool pure_only) {
  if (kind.empty()) kind = ctx.has("kind") ? ctx.input["kind"].get<std::string>() : "sup";
  if (kind != "sup" && kind != "inf") throw DomainError("--kind must be sup or inf");
  pure_only = pure_only || (ctx.has("pure_only") && ctx.input["pure_only"].get<bool>());
  const auto cfg = ctx.search_config(pure_only);
  const auto result = kind == "sup" ? supremum_bound(ms, cfg) : infimum_bound(ms, cfg);

  Json out{{"measurements", measurements_to_json(ms)},
           {"kind", kind},
           {"pure_only", pure_only},
           {"seed", cfg.seed},
           {"restarts", cfg.restarts}};
  out.update(bound_to_json(result, has_common_eigenstate(ms)));

  CsvTable csv{{"j", "envelope", "bound"}};
  for (std::size_t j = 1; j <= result.bound.size(); ++j) {
    csv.push_back({std::to_string(j), num(result.envelope.partial_sums[j]), num(result.bound[j - 1])});
  }
  return {std::move(out), std::move(csv)};
}

Output entropic_cmd(Context& ctx, const std::vector<Measurement>& ms, std::string measure) {
  if (measure.empty()) measure = ctx.has("measure") ? ctx.input["measure"].get<std::string>() : "shannon";
  const auto F = measure_from_name(measure);
  const auto cfg = ctx.search_config(false);
  const auto sup = supremum_bound(ms, cfg);
  const double value = entropic_lower_bound(F, sup);
  Json out{{"measurements", measurements_to_json(ms)},
           {"measure", F.name()},
           {"seed", cfg.seed},
           {"restarts", cfg.restarts},
           {"bound", sup.bound.values()},
           {"value", value}};
  return {std::move(out), {{"measure", "value"}, {F.name(), num(value)}}};
}

struct ConjugateArgs {
  double s = 0.0, delta_x = 0.0, delta_p = 0.0, hbar = 1.0;
  int top = 8;
  std::string eigenfunction_csv;
  bool s_given = false, dx_given = false, dp_given = false, hbar_given = false;
};

Output conjugate_cmd(Context& ctx, ConjugateArgs a) {
  if (!ctx.quad_order_given && ctx.has("quad_order")) {
    ctx.settings.quad_order = ctx.input["quad_order"].get<int>();
  }
  if (!a.hbar_given && ctx.has("hbar")) a.hbar = ctx.input["hbar"].get<double>();
  const bool from_flags = a.s_given || a.dx_given || a.dp_given;
  if (a.s_given && (a.dx_given || a.dp_given)) throw UsageError("--s excludes --delta-x/--delta-p");
  if ((a.dx_given || a.dp_given) && !(a.dx_given && a.dp_given)) {
    throw UsageError("--delta-x and --delta-p go together");
  }
  PhaseSpaceParams params = [&] {
    if (a.s_given) return PhaseSpaceParams::from_s(a.s, a.hbar);
    if (from_flags) return PhaseSpaceParams(a.delta_x, a.delta_p, a.hbar);
    if (ctx.has("delta_x") && ctx.has("delta_p")) {
      return PhaseSpaceParams(ctx.input["delta_x"].get<double>(), ctx.input["delta_p"].get<double>(), a.hbar);
    }
    if (ctx.has("s")) return PhaseSpaceParams::from_s(ctx.input["s"].get<double>(), a.hbar);
    throw UsageError("give --s or --delta-x/--delta-p");
  }();
  if (a.top < 1) throw DomainError("--top must be positive");

  const auto sp = solve_spectrum(params, ctx.settings.quad_order);
  const auto top = std::min<std::size_t>(static_cast<std::size_t>(a.top), sp.eigenvalues.size());
  const std::vector<double> mu2(sp.eigenvalues.begin(), sp.eigenvalues.begin() + static_cast<std::ptrdiff_t>(top));
  const double leading = leading_joint_probability(sp);
  const double asymptote = small_s_asymptote(params.s());

  if (!a.eigenfunction_csv.empty()) {
    std::ofstream f(a.eigenfunction_csv);
    if (!f) throw DomainError("cannot write " + a.eigenfunction_csv);
    CsvTable table{{"node", "eigenfunction"}};
    for (std::size_t i = 0; i < sp.nodes.size(); ++i) {
      table.push_back(num_row({sp.nodes[i], sp.leading_eigenfunction[i]}));
    }
    write_csv(table, f);
  }

  Json out{{"s", params.s()},
           {"delta_x", params.delta_x()},
           {"delta_p", params.delta_p()},
           {"hbar", params.hbar()},
           {"quad_order", sp.quad_order},
           {"mu2", mu2},
           {"leading_joint_probability", leading},
           {"asymptote", asymptote}};
  return {std::move(out),
          {{"s", "mu2_max", "leading_joint_probability", "asymptote"},
           num_row({params.s(), sp.mu2_max(), leading, asymptote})}};
}

Output least_uncertain_cmd(const Context& ctx, const std::string& state_file) {
  const DensityMatrix rho = [&] {
    if (!state_file.empty()) {
      const Json j = read_json_file(state_file);
      return state_from_json(j.contains("state") ? j["state"] : j);
    }
    if (ctx.has("state")) return state_from_json(ctx.input["state"]);
    if (ctx.has("entries")) return state_from_json(ctx.input);
    throw UsageError("give --state or --input");
  }();
  const auto spectrum = spectrum_descending(rho).values;
  const auto m = least_uncertain_measurement(rho);
  Json projectors = Json::array();
  for (const auto& p : m.elements()) projectors.push_back(matrix_to_json(p));
  const double entropy = von_neumann_entropy(rho);
  CsvTable csv{{"k", "spectrum"}};
  for (std::size_t k = 0; k < spectrum.size(); ++k) csv.push_back({std::to_string(k + 1), num(spectrum[k])});
  return {Json{{"state", state_to_json(rho)},
               {"spectrum", spectrum.values()},
               {"projectors", std::move(projectors)},
               {"von_neumann_entropy", entropy}},
          std::move(csv)};
}

Output reproduce_cmd(Context& ctx, std::vector<std::string> names) {
  if (names.empty() && ctx.has("scenario")) names.push_back(ctx.input["scenario"].get<std::string>());
  if (names.empty() && ctx.has("scenarios")) {
    for (const auto& s : ctx.input["scenarios"]) names.push_back(s.at("scenario").get<std::string>());
  }
  if (names.empty()) throw UsageError("name a scenario or 'all'");
  if (std::find(names.begin(), names.end(), "all") != names.end()) names = kScenarios;
  if (!ctx.quad_order_given && ctx.has("quad_order")) {
    ctx.settings.quad_order = ctx.input["quad_order"].get<int>();
  }
  ctx.search_config(false);  // pulls seed/restarts from --input

  Json out{{"seed", ctx.settings.seed},
           {"restarts", ctx.settings.restarts},
           {"quad_order", ctx.settings.quad_order}};
  CsvTable csv{{"scenario", "quantity", "reference", "computed", "deviation"}};
  Json scenarios = Json::array();
  for (const auto& name : names) {
    Json sc = reproduce_scenario(name, ctx.settings);
    for (const auto& r : sc["rows"]) {
      csv.push_back({name, r["quantity"].get<std::string>(), num(r["reference"].get<double>()),
                     num(r["computed"].get<double>()), num(r["deviation"].get<double>())});
    }
    scenarios.push_back(std::move(sc));
  }
  if (scenarios.size() == 1) {
    out.update(scenarios[0]);
  } else {
    out["scenarios"] = std::move(scenarios);
  }
  return {std::move(out), std::move(csv)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majorization uncertainty bounds for quantum measurements", "majorbound"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  std::string format = "json", input_file;
  auto* seed_opt = app.add_option("--seed", ctx.settings.seed, "RNG seed for the state search")
                       ->capture_default_str();
  auto* restarts_opt = app.add_option("--restarts", ctx.settings.restarts, "search restarts per component")
                           ->check(CLI::PositiveNumber)
                           ->capture_default_str();
  auto* quad_opt = app.add_option("--quad-order", ctx.settings.quad_order, "Gauss-Legendre nodes")
                       ->check(CLI::Range(kMinQuadOrder, 4096))
                       ->capture_default_str();
  app.add_option("--tolerance", ctx.settings.tolerance, "search step tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", ctx.settings.threads, "worker threads (0 = hardware)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--input", input_file, "JSON file; typically output of an earlier run");

  std::string a_text, b_text;
  auto* compare_cmd_ = app.add_subcommand("compare", "majorization order of two vectors");
  compare_cmd_->add_option("--a", a_text, "comma-separated probabilities");
  compare_cmd_->add_option("--b", b_text, "comma-separated probabilities");

  std::vector<std::string> vecs;
  auto* inf_cmd = app.add_subcommand("inf", "majorization infimum of vectors");
  inf_cmd->add_option("--vec", vecs, "comma-separated probabilities (repeatable)");
  auto* sup_cmd = app.add_subcommand("sup", "majorization supremum of vectors");
  sup_cmd->add_option("--vec", vecs, "comma-separated probabilities (repeatable)");

  std::string preset, measurements_file, kind, measure;
  bool pure_only = false;
  auto* bound_cmd_ = app.add_subcommand("bound", "state-independent bound for a measurement set");
  auto* entropic_cmd_ = app.add_subcommand("entropic-bound", "quasi-entropic lower bound");
  for (auto* sub : {bound_cmd_, entropic_cmd_}) {
    sub->add_option("--preset", preset, "mub2, mub3 or xx");
    sub->add_option("--measurements", measurements_file, "measurement set JSON");
  }
  bound_cmd_->add_option("--kind", kind, "sup (default) or inf")->check(CLI::IsMember({"sup", "inf"}));
  bound_cmd_->add_flag("--pure-only", pure_only, "restrict the search to pure states");
  entropic_cmd_->add_option("--measure", measure, "shannon or tsallis:<q>");

  ConjugateArgs conj;
  auto* conjugate_cmd_ = app.add_subcommand("conjugate", "position-momentum sinc-kernel spectrum");
  auto* s_opt = conjugate_cmd_->add_option("--s", conj.s, "phase-space area dx dp / (2 pi hbar)");
  auto* dx_opt = conjugate_cmd_->add_option("--delta-x", conj.delta_x, "position bin width");
  auto* dp_opt = conjugate_cmd_->add_option("--delta-p", conj.delta_p, "momentum bin width");
  auto* hbar_opt = conjugate_cmd_->add_option("--hbar", conj.hbar, "reduced Planck constant");
  conjugate_cmd_->add_option("--top", conj.top, "number of eigenvalues to report");
  conjugate_cmd_->add_option("--eigenfunction-csv", conj.eigenfunction_csv,
                             "write (node, leading eigenfunction) samples");

  std::string state_file;
  auto* least_cmd = app.add_subcommand("least-uncertain", "least uncertain rank-1 measurement");
  least_cmd->add_option("--state", state_file, "density matrix JSON");

  std::vector<std::string> scenarios;
  auto* reproduce_cmd_ = app.add_subcommand("reproduce", "reference scenarios");
  reproduce_cmd_->add_option("scenario", scenarios, "scenario names or 'all'");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  ctx.seed_given = seed_opt->count() > 0;
  ctx.restarts_given = restarts_opt->count() > 0;
  ctx.quad_order_given = quad_opt->count() > 0;
  ctx.settings.format = format == "csv" ? Format::kCsv : Format::kJson;
  conj.s_given = s_opt->count() > 0;
  conj.dx_given = dx_opt->count() > 0;
  conj.dp_given = dp_opt->count() > 0;
  conj.hbar_given = hbar_opt->count() > 0;

  try {
    if (!input_file.empty()) ctx.input = read_json_file(input_file);
    Output result;
    if (compare_cmd_->parsed()) {
      result = compare_cmd(ctx, a_text, b_text);
    } else if (inf_cmd->parsed() || sup_cmd->parsed()) {
      result = envelope_cmd(ctx, vecs, sup_cmd->parsed());
    } else if (bound_cmd_->parsed()) {
      result = bound_cmd(ctx, measurement_arg(ctx, preset, measurements_file), kind, pure_only);
    } else if (entropic_cmd_->parsed()) {
      result = entropic_cmd(ctx, measurement_arg(ctx, preset, measurements_file), measure);
    } else if (conjugate_cmd_->parsed()) {
      result = conjugate_cmd(ctx, conj);
    } else if (least_cmd->parsed()) {
      result = least_uncertain_cmd(ctx, state_file);
    } else {
      result = reproduce_cmd(ctx, scenarios);
    }
    if (ctx.settings.format == Format::kCsv) {
      write_csv(result.csv, out);
    } else {
      out << result.json.dump(2) << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace majorbound::cli
