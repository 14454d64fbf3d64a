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
#ifndef CSM_TESTS_TEST_UTIL_H_
#define CSM_TESTS_TEST_UTIL_H_

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "csm/coverage.h"
#include "csm/geometry.h"
#include "csm/reachable.h"
#include "csm/submodular.h"

namespace csm::testing {

// Random targets and robots in a square, candidate endpoints sampled
// uniformly in each robot's reach disk; traj 0 is always "stay".
struct CoverageInstance {
  Points targets;
  double sensor_radius = 3.0;
  PartitionedGroundSet ground;
  CoverageObjective objective() const { return CoverageObjective(targets, sensor_radius); }
};

inline CoverageInstance RandomCoverageInstance(std::mt19937_64& rng, int robots,
                                               int per_robot, int num_targets,
                                               double side = 20.0) {
  std::uniform_real_distribution<double> coord(0.0, side);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CoverageInstance inst;
  for (int j = 0; j < num_targets; ++j) inst.targets.emplace_back(coord(rng), coord(rng));
  std::vector<std::vector<Trajectory>> groups(robots);
  const double reach = 4.0;
  for (int i = 0; i < robots; ++i) {
    const Point center(coord(rng), coord(rng));
    groups[i].push_back(Trajectory::InReach(i, 0, center, center, reach));
    for (int k = 1; k < per_robot; ++k) {
      const double r = reach * std::sqrt(unit(rng));
      const double a = 2 * std::numbers::pi * unit(rng);
      groups[i].push_back(Trajectory::InReach(
          i, k, center + r * Point(std::cos(a), std::sin(a)), center, reach));
    }
  }
  inst.ground = PartitionedGroundSet(std::move(groups));
  return inst;
}

// Independent recount: the union of per-sensor covered index sets.
inline int UnionRecount(const Points& targets, const Points& sensors, double radius) {
  std::vector<bool> covered(targets.size(), false);
  for (const Point& s : sensors) {
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (std::hypot(targets[j].x() - s.x(), targets[j].y() - s.y()) <= radius) {
        covered[j] = true;
      }
    }
  }
  int n = 0;
  for (bool c : covered) n += c ? 1 : 0;
  return n;
}

}  // namespace csm::testing

#endif  // CSM_TESTS_TEST_UTIL_H_
