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

#include "csm/config.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace csm {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(std::string(key), "cannot parse '" + std::string(value) + "'");
  }
  return out;
}

bool ParseBool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(std::string(key), "expected true or false, got '" +
                                          std::string(value) + "'");
}

// Rethrows parse failures of enum-like values as ConfigError for `key`.
template <typename Fn>
auto Named(std::string_view key, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(key), e.what());
  }
}

std::vector<Algorithm> ParseAlgorithms(std::string_view key, std::string_view value) {
  if (value == "all") return {Algorithm::kProposed, Algorithm::kGreedy, Algorithm::kSgg};
  std::vector<Algorithm> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const std::string_view item = Trim(value.substr(0, comma));
    out.push_back(Named(key, [&] { return ParseAlgorithm(item); }));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

std::vector<std::string> PresetNames() { return {"small", "medium", "large"}; }

ScenarioConfig PresetConfig(std::string_view name) {
  ScenarioConfig c;
  if (name == "small") {
    c.num_robots = 5;
    c.num_targets = 80;
  } else if (name == "medium") {
    c.num_robots = 8;
    c.num_targets = 140;
  } else if (name == "large") {
    c.num_robots = 12;
    c.num_targets = 200;
  } else {
    throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
  }
  return c;
}

void ApplySetting(ScenarioConfig& c, std::string_view key, std::string_view raw) {
  const std::string_view v = Trim(raw);
  auto as_int = [&] { return ParseNumber<int>(key, v); };
  auto as_double = [&] { return ParseNumber<double>(key, v); };

  if (key == "preset") {
    const ScenarioConfig p = PresetConfig(v);
    c.num_robots = p.num_robots;
    c.num_targets = p.num_targets;
  } else if (key == "robots") {
    c.num_robots = as_int();
  } else if (key == "targets") {
    c.num_targets = as_int();
  } else if (key == "comm_radius") {
    c.comm_radius = as_double();
  } else if (key == "reach") {
    c.reach = as_double();
  } else if (key == "sensor_radius") {
    c.sensor_radius = as_double();
  } else if (key == "safety_radius") {
    c.safety_radius = as_double();
  } else if (key == "noise_std") {
    c.noise_std = as_double();
  } else if (key == "process_noise_std") {
    c.process_noise_std = as_double();
  } else if (key == "max_target_speed") {
    c.max_target_speed = as_double();
  } else if (key == "epochs") {
    c.epochs = as_int();
  } else if (key == "rounds") {
    c.rounds = as_int();
  } else if (key == "radial_steps") {
    c.radial_steps = as_int();
  } else if (key == "angular_step") {
    c.angular_step_deg = as_int();
  } else if (key == "weight_scheme") {
    c.weight_scheme = Named(key, [&] { return ParseWeightScheme(v); });
  } else if (key == "weight3_samples") {
    c.weight3_samples = as_int();
  } else if (key == "weight3_radius") {
    c.weight3_radius = as_double();
  } else if (key == "algorithms" || key == "algo") {
    c.algorithms = ParseAlgorithms(key, v);
  } else if (key == "objective_mode") {
    c.objective_mode = Named(key, [&] { return ParseObjectiveMode(v); });
  } else if (key == "seed") {
    c.seed = ParseNumber<std::uint64_t>(key, v);
  } else if (key == "arena_width") {
    c.arena_width = as_double();
  } else if (key == "arena_height") {
    c.arena_height = as_double();
  } else if (key == "initial_spacing") {
    c.initial_spacing = as_double();
  } else if (key == "solver_starts") {
    c.solver_starts = as_int();
  } else if (key == "solver_outer_rounds") {
    c.solver_outer_rounds = as_int();
  } else if (key == "solver_inner_iterations") {
    c.solver_inner_iterations = as_int();
  } else if (key == "threads") {
    c.threads = as_int();
  } else if (key == "record_timing") {
    c.record_timing = ParseBool(key, v);
  } else if (key == "record_snapshots") {
    c.record_snapshots = ParseBool(key, v);
  } else {
    throw ConfigError(std::string(key), "unknown setting");
  }
}

ScenarioConfig ParseConfigText(std::string_view text, ScenarioConfig base) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected key = value");
    }
    ApplySetting(base, Trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

ScenarioConfig LoadConfigFile(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfigText(buffer.str(), std::move(base));
}

void ValidateConfig(const ScenarioConfig& c) {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw ConfigError(field, what);
  };
  require(c.num_robots >= 1, "robots", "must be at least 1");
  require(c.num_targets >= 0, "targets", "must be non-negative");
  require(c.comm_radius > 0.0, "comm_radius", "must be positive");
  require(c.reach > 0.0, "reach", "must be positive");
  require(c.sensor_radius > 0.0, "sensor_radius", "must be positive");
  require(c.safety_radius >= 0.0 && c.safety_radius < c.comm_radius,
          "safety_radius", "must lie in [0, comm_radius)");
  require(c.noise_std > 0.0, "noise_std", "must be positive");
  require(c.process_noise_std >= 0.0, "process_noise_std", "must be non-negative");
  require(c.max_target_speed >= 0.0, "max_target_speed", "must be non-negative");
  require(c.epochs >= 1, "epochs", "must be at least 1");
  require(c.rounds >= 1, "rounds", "must be at least 1");
  require(c.radial_steps >= 1, "radial_steps", "must be at least 1");
  require(c.angular_step_deg > 0 && 360 % c.angular_step_deg == 0, "angular_step",
          "must divide 360");
  require(c.weight3_samples >= 1, "weight3_samples", "must be at least 1");
  require(c.weight3_radius > 0.0, "weight3_radius", "must be positive");
  require(!c.algorithms.empty(), "algorithms", "must name at least one algorithm");
  for (std::size_t i = 0; i < c.algorithms.size(); ++i) {
    require(std::count(c.algorithms.begin(), c.algorithms.end(), c.algorithms[i]) == 1,
            "algorithms", "must not repeat an algorithm");
  }
  require(c.arena_width > 0.0, "arena_width", "must be positive");
  require(c.arena_height > 0.0, "arena_height", "must be positive");
  require(c.initial_spacing > 0.0 && c.initial_spacing <= 1.0, "initial_spacing",
          "must lie in (0, 1]");
  require(c.num_robots == 1 || c.initial_spacing * c.comm_radius >= c.safety_radius,
          "initial_spacing", "places robots closer than safety_radius");
  require(c.solver_starts >= 1, "solver_starts", "must be at least 1");
  require(c.solver_outer_rounds >= 1, "solver_outer_rounds", "must be at least 1");
  require(c.solver_inner_iterations >= 1, "solver_inner_iterations",
          "must be at least 1");
  require(c.threads >= 0, "threads", "must be non-negative");
}

std::string FormatConfig(const ScenarioConfig& c) {
  std::ostringstream out;
  auto line = [&](const char* key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  std::string algorithms;
  for (Algorithm a : c.algorithms) {
    if (!algorithms.empty()) algorithms += ',';
    algorithms += ToString(a);
  }
  line("robots", std::to_string(c.num_robots));
  line("targets", std::to_string(c.num_targets));
  line("comm_radius", FormatDouble(c.comm_radius));
  line("reach", FormatDouble(c.reach));
  line("sensor_radius", FormatDouble(c.sensor_radius));
  line("safety_radius", FormatDouble(c.safety_radius));
  line("noise_std", FormatDouble(c.noise_std));
  line("process_noise_std", FormatDouble(c.process_noise_std));
  line("max_target_speed", FormatDouble(c.max_target_speed));
  line("epochs", std::to_string(c.epochs));
  line("rounds", std::to_string(c.rounds));
  line("radial_steps", std::to_string(c.radial_steps));
  line("angular_step", std::to_string(c.angular_step_deg));
  line("weight_scheme", std::string(ToString(c.weight_scheme)));
  line("weight3_samples", std::to_string(c.weight3_samples));
  line("weight3_radius", FormatDouble(c.weight3_radius));
  line("algorithms", algorithms);
  line("objective_mode", std::string(ToString(c.objective_mode)));
  line("seed", std::to_string(c.seed));
  line("arena_width", FormatDouble(c.arena_width));
  line("arena_height", FormatDouble(c.arena_height));
  line("initial_spacing", FormatDouble(c.initial_spacing));
  line("solver_starts", std::to_string(c.solver_starts));
  line("solver_outer_rounds", std::to_string(c.solver_outer_rounds));
  line("solver_inner_iterations", std::to_string(c.solver_inner_iterations));
  line("threads", std::to_string(c.threads));
  line("record_timing", c.record_timing ? "true" : "false");
  line("record_snapshots", c.record_snapshots ? "true" : "false");
  return out.str();
}

}  // namespace csm
