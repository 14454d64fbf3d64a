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
#ifndef CSM_COVERAGE_H_
#define CSM_COVERAGE_H_

#include <span>

#include "csm/geometry.h"
#include "csm/submodular.h"

namespace csm {

// Number of targets within `radius` (inclusive) of at least one sensor.
int CountCovered(std::span<const Point> targets, std::span<const Point> sensors,
                 double radius);

// f(S) = number of distinct targets whose predicted position lies inside the
// union of sensor footprints centered at the endpoints of S.
class CoverageObjective : public SetFunction {
 public:
  CoverageObjective(Points predicted_targets, double sensor_radius);

  double Evaluate(std::span<const Trajectory> set) const override;
  double EvaluateAt(std::span<const Point> sensors) const;

  const Points& targets() const { return targets_; }
  double sensor_radius() const { return sensor_radius_; }

 private:
  Points targets_;
  double sensor_radius_;
};

}  // namespace csm

#endif  // CSM_COVERAGE_H_
