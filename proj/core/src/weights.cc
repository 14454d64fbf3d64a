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

#include "csm/weights.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "csm/seeding.h"

namespace csm {

std::string_view ToString(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::kSolo:
      return "weight1";
    case WeightScheme::kMarginal:
      return "weight2";
    case WeightScheme::kVariation:
      return "weight3";
  }
  return "unknown";
}

WeightScheme ParseWeightScheme(std::string_view name) {
  if (name == "weight1") return WeightScheme::kSolo;
  if (name == "weight2") return WeightScheme::kMarginal;
  if (name == "weight3") return WeightScheme::kVariation;
  throw std::invalid_argument("unknown weight scheme '" + std::string(name) + "'");
}

std::vector<double> ComputeWeights(WeightScheme scheme, const Selection& selection,
                                   const SetFunction& f,
                                   const WeightOptions& options) {
  const std::size_t n = selection.size();
  std::vector<double> w(n, 0.0);
  switch (scheme) {
    case WeightScheme::kSolo:
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = f.Evaluate(std::span(&selection[i], 1));
      }
      break;
    case WeightScheme::kMarginal: {
      const double whole = f.Evaluate(selection);
      for (std::size_t i = 0; i < n; ++i) {
        Selection rest;
        rest.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) rest.push_back(selection[j]);
        }
        w[i] = std::max(0.0, whole - f.Evaluate(rest));
      }
      break;
    }
    case WeightScheme::kVariation: {
      if (options.samples < 1) throw std::invalid_argument("need at least one sample");
      for (std::size_t i = 0; i < n; ++i) {
        const Trajectory& s = selection[i];
        const double here = f.Evaluate(std::span(&s, 1));
        std::mt19937_64 rng(DeriveSeed(options.seed, "weight3",
                                       {static_cast<std::uint64_t>(s.robot_id)}));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double lowest = here;
        bool first = true;
        for (int k = 0; k < options.samples; ++k) {
          // Uniform over the disk: radius ~ R sqrt(u).
          const double r = options.sample_radius * std::sqrt(unit(rng));
          const double theta = 2.0 * std::numbers::pi * unit(rng);
          // Probe positions are not trajectories of the robot; they only
          // exist to evaluate f at a single point.
          const Trajectory probe{s.robot_id, -1 - k,
                                 s.endpoint + r * Point(std::cos(theta), std::sin(theta))};
          const double v = f.Evaluate(std::span(&probe, 1));
          lowest = first ? v : std::min(lowest, v);
          first = false;
        }
        w[i] = std::max(0.0, here - lowest);
      }
      break;
    }
  }
  return w;
}

}  // namespace csm
