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
#ifndef CSM_SCENARIO_H_
#define CSM_SCENARIO_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "csm/deviation.h"
#include "csm/weights.h"

namespace csm {

enum class Algorithm {
  kProposed,  // greedy, MST topology, deviation minimization
  kGreedy,    // greedy endpoints, connectivity ignored
  kSgg,       // sequential graph greedy
};

std::string_view ToString(Algorithm algorithm);
Algorithm ParseAlgorithm(std::string_view name);

// Everything needed to reproduce an experiment. Lengths in meters, target
// speeds in m/step; one epoch is one target time step.
struct ScenarioConfig {
  int num_robots = 8;
  int num_targets = 140;
  double comm_radius = 10.0;
  double reach = 4.0;
  double sensor_radius = 5.0;
  double safety_radius = 0.5;
  double noise_std = 0.5;
  double process_noise_std = 0.1;
  double max_target_speed = 0.3;
  int epochs = 10;
  int rounds = 10;
  int radial_steps = 3;
  int angular_step_deg = 30;
  WeightScheme weight_scheme = WeightScheme::kMarginal;
  int weight3_samples = 16;
  double weight3_radius = 1.0;
  std::vector<Algorithm> algorithms = {Algorithm::kProposed, Algorithm::kGreedy,
                                       Algorithm::kSgg};
  ObjectiveMode objective_mode = ObjectiveMode::kSquaredNorm;
  std::uint64_t seed = 1;
  double arena_width = 60.0;
  double arena_height = 60.0;
  // Neighbour spacing of the initial lattice, as a fraction of comm_radius.
  double initial_spacing = 0.8;
  int solver_starts = 4;
  int solver_outer_rounds = 5;
  int solver_inner_iterations = 200;
  // Worker threads for rounds; 0 picks hardware_concurrency.
  int threads = 0;
  // Wall-clock timings make output non-reproducible, so they are opt-in.
  bool record_timing = false;
  bool record_snapshots = false;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

}  // namespace csm

#endif  // CSM_SCENARIO_H_
