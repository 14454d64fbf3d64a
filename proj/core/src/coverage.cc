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

#include "csm/coverage.h"

#include <stdexcept>

namespace csm {

int CountCovered(std::span<const Point> targets, std::span<const Point> sensors,
                 double radius) {
  const double r2 = radius * radius;
  int count = 0;
  for (const Point& t : targets) {
    for (const Point& s : sensors) {
      if ((t - s).squaredNorm() <= r2) {
        ++count;
        break;
      }
    }
  }
  return count;
}

CoverageObjective::CoverageObjective(Points predicted_targets, double sensor_radius)
    : targets_(std::move(predicted_targets)), sensor_radius_(sensor_radius) {
  if (!(sensor_radius > 0.0)) {
    throw std::invalid_argument("sensor radius must be positive");
  }
}

double CoverageObjective::Evaluate(std::span<const Trajectory> set) const {
  Points sensors;
  sensors.reserve(set.size());
  for (const Trajectory& t : set) sensors.push_back(t.endpoint);
  return EvaluateAt(sensors);
}

double CoverageObjective::EvaluateAt(std::span<const Point> sensors) const {
  return CountCovered(targets_, sensors, sensor_radius_);
}

}  // namespace csm
