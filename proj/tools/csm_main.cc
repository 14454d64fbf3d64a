// Copyright 2026 The CSM Authors.
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

// csm: communication-aware multi-robot target tracking simulator.
//
//   csm run --preset medium --out results.csv
//   csm summarize --in results.csv
//   csm plotdata --in results.csv --snapshots snapshots.txt --out-dir plots
//   csm check
//
// Exit codes: 0 success, 1 runtime failure or failed check, 2 configuration
// error, 3 an epoch without a connected outcome.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csm/config.h"
#include "csm/experiment.h"
#include "csm/oracles.h"
#include "csm/planner.h"
#include "csm/report.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

struct RunFlags {
  std::string config_file;
  std::string preset;
  std::optional<int> robots, targets, rounds, epochs, threads;
  std::optional<std::string> algo, weight_scheme, objective_mode;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> settings;
  std::string out = "results.csv";
  std::string snapshots;
  bool timing = false;
  bool quiet = false;
};

csm::ScenarioConfig BuildConfig(const RunFlags& flags) {
  csm::ScenarioConfig config;
  if (!flags.preset.empty()) config = csm::PresetConfig(flags.preset);
  if (!flags.config_file.empty()) config = csm::LoadConfigFile(flags.config_file, config);
  if (const char* env = std::getenv("CSM_SEED"); env != nullptr && *env != '\0') {
    csm::ApplySetting(config, "seed", env);
  }
  for (const std::string& kv : flags.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw csm::ConfigError(kv, "expected key=value");
    csm::ApplySetting(config, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (flags.robots) config.num_robots = *flags.robots;
  if (flags.targets) config.num_targets = *flags.targets;
  if (flags.rounds) config.rounds = *flags.rounds;
  if (flags.epochs) config.epochs = *flags.epochs;
  if (flags.threads) config.threads = *flags.threads;
  if (flags.algo) csm::ApplySetting(config, "algorithms", *flags.algo);
  if (flags.weight_scheme) csm::ApplySetting(config, "weight_scheme", *flags.weight_scheme);
  if (flags.objective_mode) csm::ApplySetting(config, "objective_mode", *flags.objective_mode);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.timing) config.record_timing = true;
  if (!flags.snapshots.empty()) config.record_snapshots = true;
  csm::ValidateConfig(config);
  return config;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

std::vector<csm::ResultRow> LoadResults(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return csm::ReadResultsCsv(in);
}

int Run(const RunFlags& flags) {
  const csm::ScenarioConfig config = BuildConfig(flags);
  const csm::ExperimentResult result = csm::RunExperiment(config);
  if (flags.out == "-") {
    csm::WriteResultsCsv(std::cout, result.rows);
  } else {
    std::ofstream out = OpenOutput(flags.out);
    csm::WriteResultsCsv(out, result.rows);
  }
  if (!flags.snapshots.empty()) {
    std::ofstream out = OpenOutput(flags.snapshots);
    csm::WriteSnapshots(out, result.snapshots);
  }
  if (!flags.quiet && flags.out != "-") {
    csm::WriteSummaryTable(std::cout, csm::Summarize(result.rows));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Communication-aware submodular maximization: multi-robot tracking simulator"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Run an experiment and write a results CSV");
  run->add_option("--config", run_flags.config_file, "key=value scenario file");
  run->add_option("--preset", run_flags.preset, "small | medium | large");
  run->add_option("--robots", run_flags.robots, "Team size");
  run->add_option("--targets", run_flags.targets, "Number of targets");
  run->add_option("--rounds", run_flags.rounds, "Monte Carlo rounds");
  run->add_option("--epochs", run_flags.epochs, "Epochs per round");
  run->add_option("--algo", run_flags.algo, "Comma list of proposed,greedy,sgg or 'all'");
  run->add_option("--weight-scheme", run_flags.weight_scheme, "weight1 | weight2 | weight3");
  run->add_option("--objective-mode", run_flags.objective_mode, "norm | squared_norm");
  run->add_option("--seed", run_flags.seed, "Base seed (overrides CSM_SEED)");
  run->add_option("--threads", run_flags.threads, "Worker threads (0 = all cores)");
  run->add_option("--set", run_flags.settings, "Extra key=value setting")->take_all();
  run->add_option("--out", run_flags.out, "Results CSV path, '-' for stdout");
  run->add_option("--snapshots", run_flags.snapshots, "Also write network snapshots here");
  run->add_flag("--timing", run_flags.timing, "Record wall-clock solve time");
  run->add_flag("--quiet", run_flags.quiet, "Do not print the summary table");

  std::string summarize_in, summarize_out;
  auto* summarize = app.add_subcommand("summarize", "Aggregate a results CSV");
  summarize->add_option("--in", summarize_in, "Results CSV")->required();
  summarize->add_option("--out", summarize_out, "Write the table here instead of stdout");

  std::string plot_in, plot_snapshots, plot_dir = "plots";
  auto* plotdata = app.add_subcommand("plotdata", "Emit grouped-bar and network plot data");
  plotdata->add_option("--in", plot_in, "Results CSV")->required();
  plotdata->add_option("--snapshots", plot_snapshots, "Snapshot file from 'run --snapshots'");
  plotdata->add_option("--out-dir", plot_dir, "Output directory");

  std::uint64_t check_seed = 7;
  int check_trials = 100;
  auto* check = app.add_subcommand("check", "Run oracle and property checks on small instances");
  check->add_option("--seed", check_seed, "Seed");
  check->add_option("--trials", check_trials, "Random instances per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return Run(run_flags);
    if (*summarize) {
      const csm::Summary s = csm::Summarize(LoadResults(summarize_in));
      if (summarize_out.empty()) {
        csm::WriteSummaryTable(std::cout, s);
      } else {
        std::ofstream out = OpenOutput(summarize_out);
        csm::WriteSummaryTable(out, s);
      }
      return 0;
    }
    if (*plotdata) {
      const auto rows = LoadResults(plot_in);
      const csm::Summary s = rows.empty() ? csm::Summary{} : csm::Summarize(rows);
      std::vector<csm::NetworkSnapshot> snapshots;
      if (!plot_snapshots.empty()) {
        std::ifstream in(plot_snapshots);
        if (!in) throw std::runtime_error("cannot read '" + plot_snapshots + "'");
        snapshots = csm::ReadSnapshots(in);
      }
      const csm::PlotFiles files = csm::EmitPlotData(s, snapshots, plot_dir);
      std::cout << files.bars.string() << '\n' << files.network.string() << '\n';
      return 0;
    }
    if (*check) {
      bool all = true;
      for (const csm::CheckOutcome& c : csm::RunSelfChecks(check_seed, check_trials)) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
        all = all && c.passed;
      }
      return all ? 0 : kExitFailure;
    }
  } catch (const csm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const csm::InfeasibleEpochError& e) {
    std::cerr << "infeasible epoch: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
