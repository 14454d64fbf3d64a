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
#ifndef CSM_WEIGHTS_H_
#define CSM_WEIGHTS_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "csm/submodular.h"

namespace csm {

// How reluctant each robot is to leave its greedy endpoint.
//   kSolo       w_i = f({s_i})
//   kMarginal   w_i = f(S) - f(S \ {s_i})
//   kVariation  w_i = f({g_i}) - min_k f({x_k}), x_k uniform in the disk of
//               sample_radius around g_i, clamped at 0
enum class WeightScheme { kSolo, kMarginal, kVariation };

// Names are "weight1", "weight2", "weight3".
std::string_view ToString(WeightScheme scheme);
WeightScheme ParseWeightScheme(std::string_view name);

struct WeightOptions {
  int samples = 16;
  double sample_radius = 1.0;
  std::uint64_t seed = 0;
};

// `selection` holds one trajectory per robot ordered by robot_id (the
// greedy output). Returns weights indexed by robot.
std::vector<double> ComputeWeights(WeightScheme scheme, const Selection& selection,
                                   const SetFunction& f,
                                   const WeightOptions& options = {});

}  // namespace csm

#endif  // CSM_WEIGHTS_H_
