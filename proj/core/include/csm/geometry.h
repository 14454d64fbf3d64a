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

#ifndef CSM_GEOMETRY_H_
#define CSM_GEOMETRY_H_

#include <Eigen/Core>
#include <vector>

namespace csm {

// Planar workspace point or displacement, meters.
using Point = Eigen::Vector2d;
using Points = std::vector<Point>;

inline double Distance(const Point& a, const Point& b) { return (a - b).norm(); }

}  // namespace csm

#endif  // CSM_GEOMETRY_H_
