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

// One simulated tracking world and the per-epoch planning pipeline.

#ifndef CSM_PLANNER_H_
#define CSM_PLANNER_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "csm/deviation.h"
#include "csm/kalman.h"
#include "csm/netgraph.h"
#include "csm/reachable.h"
#include "csm/scenario.h"
#include "csm/submodular.h"

namespace csm {

struct WorldState {
  int epoch = 0;
  std::uint64_t round_seed = 0;
  std::vector<RobotState> robots;
  std::vector<TargetState> targets;       // ground truth
  std::vector<TargetEstimate> estimates;  // what the team believes

  Points RobotPositions() const;
};

// Raised if the proposed pipeline cannot produce a connected network even
// after falling back to staying in place.
class InfeasibleEpochError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Builds round `round` of an experiment. Robots start on a serpentine lattice
// centered in the arena with neighbour spacing initial_spacing * comm_radius.
// Targets are uniform over the arena with constant velocities uniform in
// [-v_max, v_max]^2. Every target starts with one noisy sighting so the
// filter has a prior.
WorldState InitWorld(const ScenarioConfig& config, int round);

// One target time step with specular reflection at the arena walls.
std::vector<TargetState> AdvanceTargets(std::vector<TargetState> targets,
                                        double width, double height);

struct EpochMetrics {
  int observed = 0;           // true targets inside some footprint at the end
  double objective = 0.0;     // coverage of the final positions (predicted)
  double greedy_objective = 0.0;
  bool connected = false;     // end-of-epoch proximity graph
  double deviation = 0.0;     // sum ||x_i - g_i|| against greedy endpoints
  double solve_seconds = 0.0;
  DeviationStatus deviation_status = DeviationStatus::kOptimalLocal;
};

struct EpochPlan {
  Points positions;
  Points greedy_endpoints;
  ProximityGraph graph;
  std::vector<Edge> tree;  // realized topology (proposed only)
  std::vector<double> weights;
  std::vector<TargetEstimate> predicted;
  std::vector<TargetState> targets_after;
  EpochMetrics metrics;
};

// Plans one epoch without touching the world. Throws std::invalid_argument if
// algorithm is kProposed and the current team is disconnected, and
// InfeasibleEpochError if no connected outcome can be produced.
EpochPlan PlanEpoch(const WorldState& world, const ScenarioConfig& config,
                    Algorithm algorithm);

// Executes a plan: robots move, targets advance, robots whose footprint
// contains a target measure it and update its filter.
void ApplyEpoch(WorldState& world, const EpochPlan& plan,
                const ScenarioConfig& config);

}  // namespace csm

#endif  // CSM_PLANNER_H_
