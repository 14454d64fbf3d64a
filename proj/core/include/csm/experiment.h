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
#ifndef CSM_EXPERIMENT_H_
#define CSM_EXPERIMENT_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "csm/geometry.h"
#include "csm/netgraph.h"
#include "csm/scenario.h"

namespace csm {

inline constexpr std::string_view kResultsHeader =
    "round,epoch,algorithm,weight_scheme,observed,objective,connected,"
    "deviation_m,solve_s";

struct ResultRow {
  int round = 0;
  int epoch = 0;
  std::string algorithm;
  std::string weight_scheme;  // "none" for baselines
  int observed = 0;
  double objective = 0.0;
  bool connected = false;
  double deviation = 0.0;
  double solve_seconds = 0.0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

// Team layout at the end of an epoch.
struct NetworkSnapshot {
  int round = 0;
  int epoch = 0;
  std::string algorithm;
  Points positions;
  std::vector<Edge> edges;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;  // sorted by (round, epoch, algorithm order)
  std::vector<NetworkSnapshot> snapshots;
};

// Runs every configured algorithm on identical initial worlds for each round.
// Rounds are spread over config.threads workers; output does not depend on
// the thread count. Throws ConfigError for an invalid config.
ExperimentResult RunExperiment(const ScenarioConfig& config);

// Fixed-point CSV with kResultsHeader; objective, deviation and time carry
// six decimals.
void WriteResultsCsv(std::ostream& out, const std::vector<ResultRow>& rows);
// Throws std::runtime_error on a bad header or malformed line.
std::vector<ResultRow> ReadResultsCsv(std::istream& in);

}  // namespace csm

#endif  // CSM_EXPERIMENT_H_
