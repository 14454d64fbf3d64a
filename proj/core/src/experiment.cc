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

#include "csm/experiment.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "csm/config.h"
#include "csm/planner.h"

namespace csm {
namespace {

struct RoundOutput {
  std::vector<ResultRow> rows;
  std::vector<NetworkSnapshot> snapshots;
};

RoundOutput RunRound(const ScenarioConfig& config, int round) {
  RoundOutput out;
  for (Algorithm algorithm : config.algorithms) {
    // Each algorithm restarts from the same world: same robots, same targets,
    // same target motion and the same measurement noise per sighting.
    WorldState world = InitWorld(config, round);
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
      const EpochPlan plan = PlanEpoch(world, config, algorithm);
      ResultRow row;
      row.round = round;
      row.epoch = epoch;
      row.algorithm = std::string(ToString(algorithm));
      row.weight_scheme = algorithm == Algorithm::kProposed
                              ? std::string(ToString(config.weight_scheme))
                              : "none";
      row.observed = plan.metrics.observed;
      row.objective = plan.metrics.objective;
      row.connected = plan.metrics.connected;
      row.deviation = plan.metrics.deviation;
      row.solve_seconds = config.record_timing ? plan.metrics.solve_seconds : 0.0;
      out.rows.push_back(std::move(row));
      if (config.record_snapshots) {
        out.snapshots.push_back(
            {round, epoch, std::string(ToString(algorithm)), plan.positions, plan.graph.edges});
      }
      ApplyEpoch(world, plan, config);
    }
  }
  return out;
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

ExperimentResult RunExperiment(const ScenarioConfig& config) {
  ValidateConfig(config);
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const int workers =
      std::min(config.rounds, config.threads > 0 ? config.threads : hw);

  std::vector<RoundOutput> outputs(config.rounds);
  std::vector<std::exception_ptr> errors(config.rounds);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int r = next++; r < config.rounds; r = next++) {
      try {
        outputs[r] = RunRound(config, r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Rounds are already in order; within a round, order by (epoch, algorithm).
  auto rank = [&](const std::string& name) {
    for (std::size_t i = 0; i < config.algorithms.size(); ++i) {
      if (ToString(config.algorithms[i]) == name) return i;
    }
    return config.algorithms.size();
  };
  ExperimentResult result;
  for (RoundOutput& out : outputs) {
    std::stable_sort(out.rows.begin(), out.rows.end(), [&](const ResultRow& a, const ResultRow& b) {
      return std::pair(a.epoch, rank(a.algorithm)) < std::pair(b.epoch, rank(b.algorithm));
    });
    std::stable_sort(out.snapshots.begin(), out.snapshots.end(),
                     [&](const NetworkSnapshot& a, const NetworkSnapshot& b) {
                       return std::pair(a.epoch, rank(a.algorithm)) <
                              std::pair(b.epoch, rank(b.algorithm));
                     });
    std::move(out.rows.begin(), out.rows.end(), std::back_inserter(result.rows));
    std::move(out.snapshots.begin(), out.snapshots.end(),
              std::back_inserter(result.snapshots));
  }
  return result;
}

void WriteResultsCsv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kResultsHeader << '\n';
  char buf[256];
  for (const ResultRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%s,%s,%d,%.6f,%d,%.6f,%.6f\n", r.round,
                  r.epoch, r.algorithm.c_str(), r.weight_scheme.c_str(), r.observed,
                  r.objective, r.connected ? 1 : 0, r.deviation, r.solve_seconds);
    out << buf;
  }
}

std::vector<ResultRow> ReadResultsCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kResultsHeader) {
    throw std::runtime_error("results file does not start with the expected header");
  }
  std::vector<ResultRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = SplitCsv(line);
    if (f.size() != 9) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 9 fields");
    }
    try {
      ResultRow r;
      r.round = std::stoi(f[0]);
      r.epoch = std::stoi(f[1]);
      r.algorithm = f[2];
      r.weight_scheme = f[3];
      r.observed = std::stoi(f[4]);
      r.objective = std::stod(f[5]);
      r.connected = std::stoi(f[6]) != 0;
      r.deviation = std::stod(f[7]);
      r.solve_seconds = std::stod(f[8]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": malformed number");
    }
  }
  return rows;
}

}  // namespace csm
