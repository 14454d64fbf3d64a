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

// Set functions over partitioned trajectory ground sets and the selectors that
// maximize them: the partition-matroid greedy, the sequential graph greedy
// (SGG) baseline that grows a connected selection, and an exhaustive optimum
// used as a test oracle.

#ifndef CSM_SUBMODULAR_H_
#define CSM_SUBMODULAR_H_

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "csm/geometry.h"

namespace csm {

// A candidate motion for one robot within one epoch, reduced to its endpoint.
struct Trajectory {
  int robot_id = 0;
  int traj_id = 0;
  Point endpoint = Point::Zero();

  // Checked construction: throws std::invalid_argument unless the endpoint
  // lies inside the disk of radius `reach` around `center` (1e-9 relative
  // slack for trigonometric round-off).
  static Trajectory InReach(int robot_id, int traj_id, const Point& endpoint,
                            const Point& center, double reach);

  bool SameId(const Trajectory& other) const {
    return robot_id == other.robot_id && traj_id == other.traj_id;
  }
};

using Selection = std::vector<Trajectory>;

// Per-robot candidate lists T_0..T_{N-1}. Group i holds only trajectories
// with robot_id == i, and (robot_id, traj_id) pairs are unique.
class PartitionedGroundSet {
 public:
  PartitionedGroundSet() = default;
  explicit PartitionedGroundSet(std::vector<std::vector<Trajectory>> groups);

  int num_robots() const { return static_cast<int>(groups_.size()); }
  const std::vector<Trajectory>& group(int robot) const {
    return groups_.at(robot);
  }
  const std::vector<std::vector<Trajectory>>& groups() const { return groups_; }
  std::size_t size() const;

 private:
  std::vector<std::vector<Trajectory>> groups_;
};

// Raised when an algorithm meets a robot without candidates.
class EmptyGroupError : public std::invalid_argument {
 public:
  explicit EmptyGroupError(int robot_id);
  int robot_id() const { return robot_id_; }

 private:
  int robot_id_;
};

// Evaluation contract f: 2^V -> R>=0. Implementations must be normalized
// (f({}) = 0), and the selectors assume monotone submodular behaviour.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual double Evaluate(std::span<const Trajectory> set) const = 0;
};

// Adapts any callable to SetFunction; handy for modular test functions.
class CallableSetFunction : public SetFunction {
 public:
  using Fn = std::function<double(std::span<const Trajectory>)>;
  explicit CallableSetFunction(Fn fn) : fn_(std::move(fn)) {}
  double Evaluate(std::span<const Trajectory> set) const override {
    return fn_(set);
  }

 private:
  Fn fn_;
};

// f(S + s) - f(S). Throws std::invalid_argument if s is already in S.
double MarginalGain(const SetFunction& f, const Trajectory& s,
                    std::span<const Trajectory> set);

struct GreedyResult {
  Selection selection;       // one trajectory per robot, ordered by robot_id
  double value = 0.0;        // f(selection)
  std::vector<int> pick_order;  // robot ids in the order they were assigned
};

// Partition-matroid greedy: N rounds, each committing the globally best
// marginal gain among unassigned robots and retiring that robot's group.
// Ties go to the lower robot_id, then the lower traj_id.
GreedyResult GreedyPartitionMatroid(const SetFunction& f,
                                    const PartitionedGroundSet& ground);

struct SggResult {
  Selection selection;
  double value = 0.0;
  std::vector<int> pick_order;
  // True when every robot found an eligible trajectory next to the grown
  // graph. False means at least one robot was placed without a link.
  bool always_eligible = true;
  // Whether the selected endpoints induce a connected proximity graph.
  bool connected = true;
};

// Sequential graph greedy. The first pick is unconstrained; afterwards only
// trajectories ending within comm_radius of an already selected endpoint are
// eligible. When no unassigned robot has an eligible trajectory, the best
// unconstrained candidate is taken and always_eligible is cleared.
SggResult SequentialGraphGreedy(const SetFunction& f,
                                const PartitionedGroundSet& ground,
                                double comm_radius);

struct OptimumResult {
  Selection selection;
  double value = 0.0;
};

// Exhaustive maximum over all one-per-group assignments, connectivity
// ignored. Throws std::length_error if the number of assignments exceeds
// max_assignments.
OptimumResult BruteForceOptimum(const SetFunction& f,
                                const PartitionedGroundSet& ground,
                                std::uint64_t max_assignments = 1'000'000);

}  // namespace csm

#endif  // CSM_SUBMODULAR_H_
