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

// Deviation minimization: given greedy endpoints that may leave the team
// disconnected, find end-of-epoch positions that realize every edge of a
// chosen spanning tree while staying inside each robot's reachable disk,
// keeping a safety separation, and moving as little (weighted) as possible
// away from the greedy endpoints.
//
//   min   sum_i w_i * dev(x_i - g_i)
//   s.t.  ||x_i - x_j|| <= r_c        for every tree edge (i, j)
//         ||x_i - c_i|| <= R_i        for every robot
//         ||x_i - x_j|| >= r_s        for every pair i != j
//
// dev is either the Euclidean norm or its square. The safety constraint makes
// the feasible set non-convex, so SolveDeviation is a multi-start local
// method; GridOracle gives an exhaustive reference on tiny instances.

#ifndef CSM_DEVIATION_H_
#define CSM_DEVIATION_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "csm/geometry.h"
#include "csm/netgraph.h"

namespace csm {

enum class ObjectiveMode { kNorm, kSquaredNorm };

std::string_view ToString(ObjectiveMode mode);
// Accepts "norm" and "squared_norm". Throws std::invalid_argument otherwise.
ObjectiveMode ParseObjectiveMode(std::string_view name);

enum class DeviationStatus { kOptimalLocal, kFallback, kInfeasibleReported };

std::string_view ToString(DeviationStatus status);

struct DeviationProblem {
  Points current;               // c_i, start-of-epoch positions
  Points greedy;                // g_i, greedy endpoints
  std::vector<double> reach;    // R_i, disks centered at current positions
  std::vector<double> weights;  // w_i >= 0
  std::vector<Edge> tree;       // spanning tree to realize
  double comm_radius = 10.0;
  double safety_radius = 0.5;
  ObjectiveMode mode = ObjectiveMode::kSquaredNorm;

  int size() const { return static_cast<int>(current.size()); }

  // Throws std::invalid_argument naming the first violated invariant.
  void Validate() const;
};

// Worst violation of each constraint family, meters (0 when satisfied).
struct ConstraintResiduals {
  double tree = 0.0;
  double reach = 0.0;
  double safety = 0.0;

  double Max() const;
};

struct DeviationSolution {
  Points positions;
  double objective = 0.0;
  DeviationStatus status = DeviationStatus::kInfeasibleReported;
  ConstraintResiduals residuals;
  // The tree the positions realize. Equal to the problem's tree except for a
  // fallback that had to replace it.
  std::vector<Edge> tree;
};

struct SolverOptions {
  // Feasibility tolerance, scaled by max(1, r_c).
  double tol = 1e-6;
  int outer_rounds = 5;
  int inner_iterations = 200;
  double penalty_growth = 10.0;
  double initial_penalty = 10.0;
  // Starts: greedy endpoints, current positions, then random per-robot
  // convex combinations of the two.
  int num_starts = 4;
  std::uint64_t seed = 0;
  // Norm mode is smoothed as sqrt(d^2 + eps^2) - eps during descent.
  double norm_smoothing = 1e-4;
};

double DeviationObjective(const DeviationProblem& problem,
                          const Points& positions);

ConstraintResiduals ComputeResiduals(const DeviationProblem& problem,
                                     const Points& positions,
                                     const std::vector<Edge>& tree);
inline ConstraintResiduals ComputeResiduals(const DeviationProblem& problem,
                                            const Points& positions) {
  return ComputeResiduals(problem, positions, problem.tree);
}

// Multi-start augmented Lagrangian with projected spectral gradient inner
// solves (reach disks are handled by exact projection) followed by a
// cyclic-projection repair pass. Returns status kInfeasibleReported, with the
// current positions, only if no start reaches feasibility.
DeviationSolution SolveDeviation(const DeviationProblem& problem,
                                 const SolverOptions& options = {});

// Exhaustive minimum over square grids (spacing `resolution`) clipped to each
// reach disk, with each greedy endpoint added to its robot's grid. Throws
// std::length_error when the product of per-robot grid sizes exceeds
// max_combinations.
DeviationSolution GridOracle(const DeviationProblem& problem, double resolution,
                             std::uint64_t max_combinations = 10'000'000);

// Stay where you are. The current positions keep every pairwise distance, so
// the graph stays as connected as current_graph. If the requested tree has an
// edge longer than r_c at the current positions, the tree is replaced by a
// spanning tree of current_graph. Throws std::invalid_argument if
// current_graph is disconnected or does not match the problem.
DeviationSolution FeasibilityFallback(const DeviationProblem& problem,
                                      const ProximityGraph& current_graph);

}  // namespace csm

#endif  // CSM_DEVIATION_H_
