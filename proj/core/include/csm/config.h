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

// Flat key=value scenario files and presets.
//
//   # comment
//   robots = 8
//   targets = 140
//   algorithms = proposed,greedy,sgg
//
// Unknown keys and malformed values raise ConfigError naming the key.

#ifndef CSM_CONFIG_H_
#define CSM_CONFIG_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "csm/scenario.h"

namespace csm {

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// "small" (5 robots, 80 targets), "medium" (8, 140), "large" (12, 200).
ScenarioConfig PresetConfig(std::string_view name);
std::vector<std::string> PresetNames();

// Applies one setting. The key "preset" resets team and target counts.
void ApplySetting(ScenarioConfig& config, std::string_view key,
                  std::string_view value);

ScenarioConfig ParseConfigText(std::string_view text, ScenarioConfig base = {});
ScenarioConfig LoadConfigFile(const std::string& path, ScenarioConfig base = {});

// Throws ConfigError for the first out-of-range field.
void ValidateConfig(const ScenarioConfig& config);

// Canonical key=value rendering; ParseConfigText(FormatConfig(c)) == c.
std::string FormatConfig(const ScenarioConfig& config);

}  // namespace csm

#endif  // CSM_CONFIG_H_
