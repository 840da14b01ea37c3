//
// Copyright 2026 The sdshuffle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "bench.hpp"
#include "report.hpp"
#include "sdshuffle/baselines.hpp"
#include "sdshuffle/csv.hpp"
#include "sdshuffle/scoring.hpp"
#include "sdshuffle/simulate.hpp"
#include "version.hpp"

namespace sdshuffle::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kSeedEnv = "SDSHUFFLE_SEED";

// Options shared by every subcommand.
struct Common {
  std::uint64_t seed = 0;
  std::string config;
  std::string report;
  unsigned workers = 0;
  CLI::Option* seed_opt = nullptr;
};

struct ResolvedSeed {
  Seed seed;
  std::string source;  // flag, config, env or random
};

void add_common(CLI::App* sub, Common& c) {
  c.seed_opt = sub->add_option("--seed", c.seed, "RNG seed");
  sub->add_option("--config", c.config, "flat key = value file with default option values");
  sub->add_option("--report", c.report, "JSON report path");
  sub->add_option("--workers", c.workers, "worker threads (0: all hardware threads)");
}

// Values from the --config file fill options not given on the command line.
// Returns the names of the keys that were applied.
std::vector<std::string> apply_config(CLI::App* sub, const std::string& path) {
  std::vector<std::string> applied;
  if (path.empty()) return applied;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::Error& e) {
    throw ParseError(path + ": " + e.what());
  }
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    if (!item.parents.empty() && item.parents.front() != sub->get_name()) continue;
    if (item.name == "config") throw ParseError(path + ": config files cannot nest");
    CLI::Option* opt = sub->get_option_no_throw("--" + item.name);
    if (opt == nullptr) throw ParseError(path + ": unknown key '" + item.name + "'");
    if (opt->count() > 0) continue;
    try {
      opt->add_result(item.inputs);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ParseError(path + ": key '" + item.name + "': " + e.what());
    }
    applied.push_back(item.name);
  }
  return applied;
}

ResolvedSeed resolve_seed(const Common& c, const std::vector<std::string>& from_config,
                          bool flag_given) {
  if (flag_given) return {Seed{c.seed}, "flag"};
  if (std::find(from_config.begin(), from_config.end(), "seed") != from_config.end()) {
    return {Seed{c.seed}, "config"};
  }
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError(std::string(kSeedEnv) + " is not an unsigned integer: " + env);
    }
    return {Seed{value}, "env"};
  }
  std::random_device device;
  const std::uint64_t value = (static_cast<std::uint64_t>(device()) << 32) ^ device();
  return {Seed{value}, "random"};
}

void require(bool present, const std::string& flag) {
  if (!present) throw ParseError("missing required option --" + flag);
}

void print_seed(std::ostream& out, const ResolvedSeed& s) {
  out << "seed: " << s.seed.value << " (" << s.source << ")\n";
}

void emit_report(const Json& doc, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << dump(doc);
  } else {
    write_json_file(path, doc);
  }
}

Json common_config(const Common& c, const ResolvedSeed& seed) {
  Json cfg;
  cfg["seed"] = seed.seed.value;
  cfg["workers"] = c.workers;
  return cfg;
}

// ---- mask ------------------------------------------------------------------

struct MaskArgs {
  Common common;
  std::string input, output, method;
  double param = 0.0;
};

int cmd_mask(CLI::App* sub, MaskArgs& a, std::ostream& out) {
  const auto from_config = apply_config(sub, a.common.config);
  require(!a.input.empty(), "input");
  require(!a.output.empty(), "output");
  require(!a.method.empty(), "method");
  require(sub->get_option("--param")->count() > 0, "param");
  const bool seed_flag = a.common.seed_opt->count() > 0 &&
                         std::find(from_config.begin(), from_config.end(), "seed") ==
                             from_config.end();
  const ResolvedSeed seed = resolve_seed(a.common, from_config, seed_flag);
  const MaskSpec spec{parse_mask_method(a.method), a.param, seed.seed};
  validate(spec);

  const DataMatrix data = read_csv_file(a.input);
  Diagnostics diag;
  const DataMatrix masked = apply_mask(data, spec, &diag);
  write_csv_file(a.output, masked);
  print_seed(out, seed);

  if (!a.common.report.empty()) {
    Json doc = report_header("mask");
    Json cfg = common_config(a.common, seed);
    cfg["input"] = a.input;
    cfg["output"] = a.output;
    cfg["method"] = a.method;
    cfg["param"] = a.param;
    doc["config"] = std::move(cfg);
    doc["rows"] = masked.rows();
    doc["columns"] = masked.column_names();
    doc["warnings"] = to_json(diag);
    emit_report(doc, a.common.report, out);
  }
  return kExitOk;
}

// ---- evaluate --------------------------------------------------------------

struct EvaluateArgs {
  Common common;
  std::string input, masked, method;
  bool sorted = false;
  CLI::Option* sorted_opt = nullptr;
};

int cmd_evaluate(CLI::App* sub, EvaluateArgs& a, std::ostream& out) {
  const auto from_config = apply_config(sub, a.common.config);
  require(!a.input.empty(), "input");
  require(!a.masked.empty(), "masked");
  const bool seed_flag = a.common.seed_opt->count() > 0 &&
                         std::find(from_config.begin(), from_config.end(), "seed") ==
                             from_config.end();
  const ResolvedSeed seed = resolve_seed(a.common, from_config, seed_flag);

  bool sorted = false;
  if (a.sorted_opt->count() > 0) {
    sorted = a.sorted;
  } else if (!a.method.empty()) {
    sorted = is_mapping_free(parse_mask_method(a.method));
  }
  const DataMatrix original = read_csv_file(a.input);
  const DataMatrix masked = read_csv_file(a.masked);
  require_same_shape(original, masked);

  Diagnostics diag;
  const MetricBundle metrics = evaluate_metrics(original, masked, {sorted, seed.seed}, &diag);
  const ScoreBundle scores = compute_scores(metrics);

  Json doc = report_header("evaluate");
  Json cfg = common_config(a.common, seed);
  cfg["input"] = a.input;
  cfg["masked"] = a.masked;
  if (!a.method.empty()) cfg["method"] = a.method;
  cfg["sorted"] = sorted;
  doc["config"] = std::move(cfg);
  doc["metrics"] = to_json(metrics);
  doc["scores"] = to_json(scores);
  doc["warnings"] = to_json(diag);
  print_seed(out, seed);
  emit_report(doc, a.common.report, out);
  return kExitOk;
}

// ---- tune ------------------------------------------------------------------

struct TuneArgs {
  Common common;
  std::string input, output, method, grid;
  double threshold = kDefaultDbrlThreshold;
  int replications = 1;
};

int cmd_tune(CLI::App* sub, TuneArgs& a, std::ostream& out, std::ostream& err) {
  const auto from_config = apply_config(sub, a.common.config);
  require(!a.input.empty(), "input");
  require(!a.method.empty(), "method");
  const bool seed_flag = a.common.seed_opt->count() > 0 &&
                         std::find(from_config.begin(), from_config.end(), "seed") ==
                             from_config.end();
  const ResolvedSeed seed = resolve_seed(a.common, from_config, seed_flag);
  const MaskMethod method = parse_mask_method(a.method);
  const std::vector<double> grid = a.grid.empty() ? default_grid(method) : parse_grid(a.grid);

  TuningOptions options;
  options.threshold = a.threshold;
  options.replications = a.replications;
  options.seed = seed.seed;
  options.workers = a.common.workers;

  const DataMatrix data = read_csv_file(a.input);
  Diagnostics diag;
  const TuningResult result = select_best_parameter(data, method, grid, options, &diag);

  Json doc = report_header("tune");
  Json cfg = common_config(a.common, seed);
  cfg["input"] = a.input;
  if (!a.output.empty()) cfg["output"] = a.output;
  cfg["method"] = a.method;
  Json grid_values = Json::array();
  for (double g : grid) grid_values.push_back(g);
  cfg["grid"] = std::move(grid_values);
  cfg["threshold"] = a.threshold;
  cfg["replications"] = result.grid.front().replications;
  doc["config"] = std::move(cfg);
  doc["tuning"] = to_json(result);
  doc["warnings"] = to_json(diag);
  print_seed(out, seed);

  if (result.infeasible()) {
    emit_report(doc, a.common.report, out);
    err << "no grid point has median DBRL below " << format_double(a.threshold) << "\n";
    return kExitInfeasible;
  }
  const std::size_t best = *result.selected;
  out << "selected " << a.method << " param " << format_double(result.grid[best].param)
      << " (median DBRL " << format_double(result.grid[best].median.dbrl) << ", overall "
      << format_double(result.grid[best].scores.overall) << ")\n";
  if (!a.output.empty()) {
    // The selected point's first replication.
    const MaskSpec spec{method, result.grid[best].param, replication_seed(seed.seed, best, 0)};
    write_csv_file(a.output, apply_mask(data, spec));
  }
  emit_report(doc, a.common.report, out);
  return kExitOk;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  Common common;
  std::string preset, family, output;
  std::size_t n = 500, p = 10;
  int datasets = 0;
  std::optional<double> rho, lambda;
  std::vector<double> mu;
};

int cmd_simulate(CLI::App* sub, SimulateArgs& a, std::ostream& out) {
  const auto from_config = apply_config(sub, a.common.config);
  require(!a.output.empty(), "output");
  if (a.preset.empty() == a.family.empty()) {
    throw ParseError("give exactly one of --preset and --family");
  }
  const bool seed_flag = a.common.seed_opt->count() > 0 &&
                         std::find(from_config.begin(), from_config.end(), "seed") ==
                             from_config.end();
  const ResolvedSeed seed = resolve_seed(a.common, from_config, seed_flag);

  SimPreset preset;
  if (!a.preset.empty()) {
    preset = sim_preset(a.preset);
  } else {
    preset = {a.family, parse_sim_family(a.family), a.n, a.p, 1};
  }
  if (a.datasets > 0) preset.datasets = a.datasets;
  if (sub->get_option("--n")->count() > 0) preset.n = a.n;
  if (sub->get_option("--p")->count() > 0) preset.p = a.p;

  std::vector<SimSpec> specs;
  for (int i = 0; i < preset.datasets; ++i) {
    SimSpec spec = preset_spec(preset, i, seed.seed);
    spec.rho = a.rho;
    spec.lambda = a.lambda;
    if (!a.mu.empty()) spec.mu = a.mu;
    validate(spec);
    specs.push_back(std::move(spec));
  }

  const fs::path dir(a.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());

  Json doc = report_header("simulate");
  Json cfg = common_config(a.common, seed);
  if (!a.preset.empty()) cfg["preset"] = a.preset;
  cfg["family"] = std::string(to_string(preset.family));
  cfg["n"] = preset.n;
  cfg["p"] = preset.p;
  cfg["datasets"] = preset.datasets;
  if (a.rho) cfg["rho"] = *a.rho;
  if (a.lambda) cfg["lambda"] = *a.lambda;
  if (!a.mu.empty()) cfg["mu"] = a.mu;
  cfg["output"] = a.output;
  doc["config"] = std::move(cfg);
  Json entries = Json::array();
  for (int i = 0; i < preset.datasets; ++i) {
    const SimulatedDataset ds = simulate(specs[static_cast<std::size_t>(i)]);
    char name[64];
    std::snprintf(name, sizeof name, "%s-%03d.csv", preset.name.c_str(), i + 1);
    write_csv_file(dir / name, ds.data);
    Json e;
    e["file"] = name;
    e["seed"] = specs[static_cast<std::size_t>(i)].seed.value;
    e["rho"] = ds.rho;
    if (!ds.mu.empty()) e["mu"] = ds.mu;
    if (ds.lambda) e["lambda"] = *ds.lambda;
    entries.push_back(std::move(e));
  }
  doc["datasets"] = std::move(entries);
  write_json_file(dir / "manifest.json", doc);
  if (!a.common.report.empty()) emit_report(doc, a.common.report, out);
  print_seed(out, seed);
  out << "wrote " << preset.datasets << " dataset(s) to " << dir.string() << "\n";
  return kExitOk;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
  Common common;
  std::vector<std::string> methods{"sjppds-s", "sjppds-f"};
  std::vector<std::string> sweeps{"n", "p", "n_c"};
  std::string sweep_n, sweep_p, sweep_nc, output;
  std::size_t base_n = 10000, base_p = 10;
  int base_nc = 100;
  int rounds = 5;
  double min_seconds = 0.05;
};

SweepAxis parse_axis(const std::string& s) {
  if (s == "n") return SweepAxis::Rows;
  if (s == "p") return SweepAxis::Columns;
  if (s == "n_c" || s == "nc") return SweepAxis::Classes;
  throw InvalidParameter("unknown sweep '" + s + "' (expected n, p or n_c)");
}

int cmd_bench(CLI::App* sub, BenchArgs& a, std::ostream& out, std::ostream& err) {
  const auto from_config = apply_config(sub, a.common.config);
  const bool seed_flag = a.common.seed_opt->count() > 0 &&
                         std::find(from_config.begin(), from_config.end(), "seed") ==
                             from_config.end();
  const ResolvedSeed seed = resolve_seed(a.common, from_config, seed_flag);

  BenchOptions options;
  options.methods.clear();
  for (const auto& m : a.methods) options.methods.push_back(parse_mask_method(m));
  options.axes.clear();
  for (const auto& s : a.sweeps) options.axes.push_back(parse_axis(s));
  if (!a.sweep_n.empty()) options.n_values = parse_grid(a.sweep_n);
  if (!a.sweep_p.empty()) options.p_values = parse_grid(a.sweep_p);
  if (!a.sweep_nc.empty()) options.nc_values = parse_grid(a.sweep_nc);
  options.base_n = a.base_n;
  options.base_p = a.base_p;
  options.base_nc = a.base_nc;
  options.rounds = a.rounds;
  options.min_seconds = a.min_seconds;
  options.seed = seed.seed;
  if (a.base_n < 2 || a.base_p < 2 || a.base_nc < 1) {
    throw InvalidParameter("bench base sizes need n >= 2, p >= 2, n_c >= 1");
  }
  print_seed(out, seed);
  const BenchResult result = run_bench(options, &err);

  if (!a.output.empty()) {
    std::ofstream table(a.output, std::ios::binary | std::ios::trunc);
    if (!table) throw IoError("cannot open " + a.output + " for writing");
    table << "method,sweep,n,p,n_c,median_cpu_seconds\n";
    for (const auto& pt : result.points) {
      table << to_string(pt.method) << ',' << to_string(pt.axis) << ',' << pt.n << ',' << pt.p
            << ',' << pt.n_c << ',' << format_double(pt.median_seconds) << '\n';
    }
    if (!table) throw IoError("write failed for " + a.output);
  }
  Json doc = report_header("bench");
  Json cfg = common_config(a.common, seed);
  cfg["methods"] = a.methods;
  cfg["sweeps"] = a.sweeps;
  cfg["rounds"] = a.rounds;
  cfg["min-seconds"] = a.min_seconds;
  doc["config"] = std::move(cfg);
  doc["timing"] = "process CPU time; median over interleaved rounds";
  Json slopes = Json::array();
  for (const auto& s : result.slopes) {
    slopes.push_back({{"method", std::string(to_string(s.method))},
                      {"sweep", std::string(to_string(s.axis))},
                      {"slope", s.slope},
                      {"round_slopes", s.round_slopes}});
    out << to_string(s.method) << " " << to_string(s.axis)
        << " log-log slope: " << format_double(s.slope) << "\n";
  }
  doc["slopes"] = std::move(slopes);
  Json points = Json::array();
  for (const auto& pt : result.points) {
    points.push_back({{"method", std::string(to_string(pt.method))},
                      {"sweep", std::string(to_string(pt.axis))},
                      {"n", pt.n},
                      {"p", pt.p},
                      {"n_c", pt.n_c},
                      {"seconds", pt.seconds},
                      {"median_seconds", pt.median_seconds}});
  }
  doc["points"] = std::move(points);
  if (!a.common.report.empty()) emit_report(doc, a.common.report, out);
  return kExitOk;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  const auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw ParseError("bad grid '" + text + "': expected start:step:end");
    }
    return v;
  };
  const auto first = text.find(':');
  if (first == std::string::npos) return {number(text)};
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw ParseError("bad grid '" + text + "': expected start:step:end");
  }
  const std::string_view view(text);
  const double start = number(view.substr(0, first));
  const double step = number(view.substr(first + 1, second - first - 1));
  const double end = number(view.substr(second + 1));
  if (!(step > 0.0) || end < start) {
    throw InvalidParameter("grid '" + text + "' needs step > 0 and end >= start");
  }
  const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
  if (count > 100000) throw InvalidParameter("grid '" + text + "' is too long");
  std::vector<double> values;
  for (std::size_t i = 0; i < count; ++i) values.push_back(start + static_cast<double>(i) * step);
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Masking, evaluation and tuning of numerical microdata.", "sdshuffle"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  MaskArgs mask;
  auto* mask_cmd = app.add_subcommand("mask", "Mask a CSV dataset");
  add_common(mask_cmd, mask.common);
  mask_cmd->add_option("--input", mask.input, "input CSV");
  mask_cmd->add_option("--output", mask.output, "masked CSV");
  mask_cmd->add_option("--method", mask.method,
                       "sjppds-f, sjppds-s, mdav, noise-ind, noise-corr or rank-swap");
  mask_cmd->add_option("--param", mask.param, "n_c, k, noise % or swap %");

  EvaluateArgs eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Risk and loss metrics of a masked dataset");
  add_common(eval_cmd, eval.common);
  eval_cmd->add_option("--input", eval.input, "original CSV");
  eval_cmd->add_option("--masked", eval.masked, "masked CSV");
  eval_cmd->add_option("--method", eval.method, "masker that produced --masked");
  eval.sorted_opt = eval_cmd->add_flag("--sorted,!--no-sorted", eval.sorted,
                                       "force the sorted-average form on or off");

  TuneArgs tune;
  auto* tune_cmd = app.add_subcommand("tune", "Select a parameter under a DBRL threshold");
  add_common(tune_cmd, tune.common);
  tune_cmd->add_option("--input", tune.input, "input CSV");
  tune_cmd->add_option("--output", tune.output, "masked CSV at the selected parameter");
  tune_cmd->add_option("--method", tune.method, "masking method");
  tune_cmd->add_option("--param", tune.grid, "single parameter (same as a one-point grid)");
  tune_cmd->add_option("--grid", tune.grid, "start:step:end");
  tune_cmd->add_option("--threshold", tune.threshold, "DBRL threshold in (0, 1]");
  tune_cmd->add_option("--replications", tune.replications, "replications per grid point");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Generate synthetic datasets");
  add_common(sim_cmd, sim.common);
  sim_cmd->add_option("--preset", sim.preset, "gaussian-sim or exponential-sim");
  sim_cmd->add_option("--family", sim.family, "gaussian-ar, exponential-copula or benchmark");
  sim_cmd->add_option("--n", sim.n, "rows");
  sim_cmd->add_option("--p", sim.p, "columns");
  sim_cmd->add_option("--datasets", sim.datasets, "number of datasets");
  sim_cmd->add_option("--rho", sim.rho, "AR(1) correlation");
  sim_cmd->add_option("--lambda", sim.lambda, "exponential rate");
  sim_cmd->add_option("--mu", sim.mu, "column means (gaussian-ar)")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sim_cmd->add_option("--output", sim.output, "output directory");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Scaling benchmark");
  add_common(bench_cmd, bench.common);
  bench_cmd->add_option("--method", bench.methods, "methods to time")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  bench_cmd->add_option("--sweep", bench.sweeps, "n, p and/or n_c")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  bench_cmd->add_option("--sweep-n", bench.sweep_n, "rows sweep start:step:end");
  bench_cmd->add_option("--sweep-p", bench.sweep_p, "columns sweep start:step:end");
  bench_cmd->add_option("--sweep-nc", bench.sweep_nc, "classes sweep start:step:end");
  bench_cmd->add_option("--n", bench.base_n, "rows when not swept");
  bench_cmd->add_option("--p", bench.base_p, "columns when not swept");
  bench_cmd->add_option("--nc", bench.base_nc, "classes when not swept");
  bench_cmd->add_option("--rounds", bench.rounds, "interleaved timing rounds");
  bench_cmd->add_option("--min-seconds", bench.min_seconds, "minimum CPU time per measurement");
  bench_cmd->add_option("--output", bench.output, "timing table CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (mask_cmd->parsed()) return cmd_mask(mask_cmd, mask, out);
    if (eval_cmd->parsed()) return cmd_evaluate(eval_cmd, eval, out);
    if (tune_cmd->parsed()) return cmd_tune(tune_cmd, tune, out, err);
    if (sim_cmd->parsed()) return cmd_simulate(sim_cmd, sim, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_cmd, bench, out, err);
    return kExitParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvalidParameter& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace sdshuffle::cli
