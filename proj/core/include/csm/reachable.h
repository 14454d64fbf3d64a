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
#ifndef CSM_REACHABLE_H_
#define CSM_REACHABLE_H_

#include <vector>

#include "csm/geometry.h"
#include "csm/submodular.h"

namespace csm {

struct RobotState {
  int id = 0;
  Point position = Point::Zero();
  double reach = 4.0;          // reachable disk radius per epoch, m
  double sensor_radius = 5.0;  // footprint radius, m
};

// Polar sampling of the reachable disk. traj_id 0 is "stay" at the center;
// then ring k = 1..radial_steps at radius k * reach / radial_steps, each
// sampled at angles 0, step, ..., 360 - step degrees, counter-clockwise from
// +x. Throws std::invalid_argument unless radial_steps >= 1 and
// angular_step_deg divides 360.
std::vector<Trajectory> DiscretizeReachable(const RobotState& robot,
                                            int radial_steps,
                                            int angular_step_deg);

}  // namespace csm

#endif  // CSM_REACHABLE_H_
