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

#include "csm/kalman.h"

#include <stdexcept>

#include <Eigen/LU>

namespace csm {

TargetEstimate KfPredict(const TargetEstimate& estimate, double process_noise_std) {
  TargetEstimate out = estimate;
  out.mean += estimate.velocity;
  out.covariance +=
      process_noise_std * process_noise_std * Eigen::Matrix2d::Identity();
  return out;
}

TargetEstimate KfUpdate(const TargetEstimate& estimate, const Point& measurement,
                        double noise_std, int time) {
  if (estimate.last_measurement && time <= estimate.last_observed) {
    throw std::invalid_argument("measurement time must advance");
  }
  TargetEstimate out = estimate;
  const Eigen::Matrix2d& prior = estimate.covariance;
  const Eigen::Matrix2d innovation_cov =
      prior + noise_std * noise_std * Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d gain = prior * innovation_cov.inverse();
  out.mean = estimate.mean + gain * (measurement - estimate.mean);
  // Joseph form keeps the covariance symmetric positive semidefinite.
  const Eigen::Matrix2d residual = Eigen::Matrix2d::Identity() - gain;
  Eigen::Matrix2d posterior = residual * prior * residual.transpose() +
                              noise_std * noise_std * gain * gain.transpose();
  out.covariance = 0.5 * (posterior + posterior.transpose());

  if (estimate.last_measurement) {
    out.velocity = (measurement - *estimate.last_measurement) /
                   static_cast<double>(time - estimate.last_observed);
  }
  out.last_measurement = measurement;
  out.last_observed = time;
  return out;
}

}  // namespace csm
