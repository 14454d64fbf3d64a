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
#ifndef CSM_KALMAN_H_
#define CSM_KALMAN_H_

#include <optional>

#include <Eigen/Core>

#include "csm/geometry.h"

namespace csm {

// Ground truth for one target: single integrator, p(t+1) = p(t) + v(t).
struct TargetState {
  int id = 0;
  Point position = Point::Zero();
  Point velocity = Point::Zero();  // m/step
};

// Position filter for one target. The velocity is not a filter state: it is
// the finite difference of the two most recent raw measurements.
struct TargetEstimate {
  int id = 0;
  Point mean = Point::Zero();
  Point velocity = Point::Zero();
  Eigen::Matrix2d covariance = Eigen::Matrix2d::Identity();
  int last_observed = -1;  // time step of the latest measurement, -1 if none
  std::optional<Point> last_measurement;
};

// Constant-velocity prediction: mean += velocity, P += q^2 I.
TargetEstimate KfPredict(const TargetEstimate& estimate,
                         double process_noise_std = 0.1);

// Position update with R = noise_std^2 I at time step `time`. If an earlier
// measurement exists, velocity becomes (z - z_prev) / (time - t_prev).
// Throws std::invalid_argument if time does not advance past last_observed.
TargetEstimate KfUpdate(const TargetEstimate& estimate, const Point& measurement,
                        double noise_std, int time);

}  // namespace csm

#endif  // CSM_KALMAN_H_
