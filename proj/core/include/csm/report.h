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
#ifndef CSM_REPORT_H_
#define CSM_REPORT_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "csm/experiment.h"

namespace csm {

// Targets observed for one (algorithm, epoch) cell across rounds.
struct EpochStat {
  std::string algorithm;
  std::string weight_scheme;
  int epoch = 0;
  int count = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single row
};

struct AlgorithmStat {
  std::string algorithm;
  std::string weight_scheme;
  int count = 0;
  double mean_observed = 0.0;
  double stddev_observed = 0.0;
  double connectivity_rate = 0.0;
  double mean_deviation = 0.0;
  double mean_objective = 0.0;
};

struct Summary {
  std::vector<EpochStat> per_epoch;          // algorithm order, then epoch
  std::vector<AlgorithmStat> per_algorithm;  // first-appearance order
};

// Throws std::invalid_argument on empty input.
Summary Summarize(std::span<const ResultRow> rows);

void WriteSummaryTable(std::ostream& out, const Summary& summary);

// Network snapshot text format, one block per snapshot:
//
//   snapshot <round> <epoch> <algorithm> <num_robots> <num_edges>
//   robot <index> <x> <y>
//   edge <u> <v>
//
// Coordinates use max_digits10 so a write/read cycle is lossless. The file
// starts with the line "# csm network snapshots v1".
void WriteSnapshots(std::ostream& out, std::span<const NetworkSnapshot> snapshots);
// Throws std::runtime_error on malformed input.
std::vector<NetworkSnapshot> ReadSnapshots(std::istream& in);

struct PlotFiles {
  std::filesystem::path bars;     // epoch,algorithm,weight_scheme,mean,std,n
  std::filesystem::path network;  // snapshot format above
};

inline constexpr const char* kBarsHeader = "epoch,algorithm,weight_scheme,mean,std,n";

// Writes bars.csv and network.txt under dir (created if missing). Throws
// std::runtime_error if a file cannot be written.
PlotFiles EmitPlotData(const Summary& summary,
                       std::span<const NetworkSnapshot> snapshots,
                       const std::filesystem::path& dir);

}  // namespace csm

#endif  // CSM_REPORT_H_
