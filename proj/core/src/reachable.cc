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

#include "csm/reachable.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csm {

std::vector<Trajectory> DiscretizeReachable(const RobotState& robot,
                                            int radial_steps,
                                            int angular_step_deg) {
  if (radial_steps < 1) throw std::invalid_argument("radial_steps must be >= 1");
  if (angular_step_deg <= 0 || 360 % angular_step_deg != 0) {
    throw std::invalid_argument("angular step must divide 360 degrees");
  }
  if (!(robot.reach > 0.0)) throw std::invalid_argument("reach must be positive");

  const int per_ring = 360 / angular_step_deg;
  std::vector<Trajectory> out;
  out.reserve(1 + radial_steps * per_ring);
  out.push_back(Trajectory::InReach(robot.id, 0, robot.position, robot.position,
                                    robot.reach));
  int id = 1;
  for (int ring = 1; ring <= radial_steps; ++ring) {
    const double radius = robot.reach * ring / radial_steps;
    for (int k = 0; k < per_ring; ++k) {
      const double theta = (k * angular_step_deg) * std::numbers::pi / 180.0;
      const Point endpoint =
          robot.position + radius * Point(std::cos(theta), std::sin(theta));
      out.push_back(Trajectory::InReach(robot.id, id++, endpoint, robot.position,
                                        robot.reach));
    }
  }
  return out;
}

}  // namespace csm
