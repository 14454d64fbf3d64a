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

#include "csm/submodular.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "csm/netgraph.h"

namespace csm {
namespace {

bool Contains(std::span<const Trajectory> set, const Trajectory& s) {
  return std::any_of(set.begin(), set.end(),
                     [&](const Trajectory& t) { return t.SameId(s); });
}

void RequireNonEmptyGroups(const PartitionedGroundSet& ground) {
  for (int i = 0; i < ground.num_robots(); ++i) {
    if (ground.group(i).empty()) throw EmptyGroupError(i);
  }
}

Selection SortedByRobot(Selection selection) {
  std::sort(selection.begin(), selection.end(),
            [](const Trajectory& a, const Trajectory& b) {
              return a.robot_id < b.robot_id;
            });
  return selection;
}

struct Candidate {
  int robot = -1;
  int index = -1;  // position within the robot's group
  double gain = 0.0;
};

// Strictly better gain wins; equal gains keep the earlier (robot, traj)
// candidate because groups are scanned in that order.
void Offer(Candidate& best, int robot, int index, double gain) {
  if (best.robot < 0 || gain > best.gain) best = {robot, index, gain};
}

}  // namespace

Trajectory Trajectory::InReach(int robot_id, int traj_id, const Point& endpoint,
                               const Point& center, double reach) {
  const double slack = 1e-9 * std::max(1.0, reach);
  if (!(reach >= 0.0) || Distance(endpoint, center) > reach + slack) {
    throw std::invalid_argument("trajectory " + std::to_string(traj_id) +
                                " of robot " + std::to_string(robot_id) +
                                " ends outside the reachable disk");
  }
  return Trajectory{robot_id, traj_id, endpoint};
}

PartitionedGroundSet::PartitionedGroundSet(
    std::vector<std::vector<Trajectory>> groups)
    : groups_(std::move(groups)) {
  for (int i = 0; i < num_robots(); ++i) {
    std::set<int> seen;
    for (const Trajectory& t : groups_[i]) {
      if (t.robot_id != i) {
        throw std::invalid_argument(
            "trajectory with robot_id " + std::to_string(t.robot_id) +
            " placed in group " + std::to_string(i));
      }
      if (!seen.insert(t.traj_id).second) {
        throw std::invalid_argument("duplicate traj_id " +
                                    std::to_string(t.traj_id) + " for robot " +
                                    std::to_string(i));
      }
    }
  }
}

std::size_t PartitionedGroundSet::size() const {
  std::size_t n = 0;
  for (const auto& g : groups_) n += g.size();
  return n;
}

EmptyGroupError::EmptyGroupError(int robot_id)
    : std::invalid_argument("robot " + std::to_string(robot_id) +
                            " has no candidate trajectories"),
      robot_id_(robot_id) {}

double MarginalGain(const SetFunction& f, const Trajectory& s,
                    std::span<const Trajectory> set) {
  if (Contains(set, s)) {
    throw std::invalid_argument("marginal gain of an element already in the set");
  }
  Selection extended(set.begin(), set.end());
  extended.push_back(s);
  return f.Evaluate(extended) - f.Evaluate(set);
}

GreedyResult GreedyPartitionMatroid(const SetFunction& f,
                                    const PartitionedGroundSet& ground) {
  RequireNonEmptyGroups(ground);
  const int n = ground.num_robots();
  std::vector<bool> assigned(n, false);
  Selection chosen;
  chosen.reserve(n);
  GreedyResult result;
  double current = f.Evaluate(chosen);

  for (int round = 0; round < n; ++round) {
    Candidate best;
    for (int i = 0; i < n; ++i) {
      if (assigned[i]) continue;
      const auto& group = ground.group(i);
      for (int k = 0; k < static_cast<int>(group.size()); ++k) {
        chosen.push_back(group[k]);
        Offer(best, i, k, f.Evaluate(chosen) - current);
        chosen.pop_back();
      }
    }
    chosen.push_back(ground.group(best.robot)[best.index]);
    current = f.Evaluate(chosen);
    assigned[best.robot] = true;
    result.pick_order.push_back(best.robot);
  }
  result.selection = SortedByRobot(std::move(chosen));
  result.value = f.Evaluate(result.selection);
  return result;
}

SggResult SequentialGraphGreedy(const SetFunction& f,
                                const PartitionedGroundSet& ground,
                                double comm_radius) {
  if (!(comm_radius > 0.0)) {
    throw std::invalid_argument("communication radius must be positive");
  }
  RequireNonEmptyGroups(ground);
  const int n = ground.num_robots();
  std::vector<bool> assigned(n, false);
  Selection chosen;
  chosen.reserve(n);
  SggResult result;
  double current = f.Evaluate(chosen);

  auto links_to_graph = [&](const Trajectory& t) {
    if (chosen.empty()) return true;
    return std::any_of(chosen.begin(), chosen.end(), [&](const Trajectory& c) {
      return Distance(c.endpoint, t.endpoint) <= comm_radius;
    });
  };

  for (int round = 0; round < n; ++round) {
    Candidate eligible;
    Candidate any;
    for (int i = 0; i < n; ++i) {
      if (assigned[i]) continue;
      const auto& group = ground.group(i);
      for (int k = 0; k < static_cast<int>(group.size()); ++k) {
        chosen.push_back(group[k]);
        const double gain = f.Evaluate(chosen) - current;
        chosen.pop_back();
        Offer(any, i, k, gain);
        if (links_to_graph(group[k])) Offer(eligible, i, k, gain);
      }
    }
    Candidate pick = eligible;
    if (pick.robot < 0) {
      pick = any;
      result.always_eligible = false;
    }
    chosen.push_back(ground.group(pick.robot)[pick.index]);
    current = f.Evaluate(chosen);
    assigned[pick.robot] = true;
    result.pick_order.push_back(pick.robot);
  }
  result.selection = SortedByRobot(std::move(chosen));
  result.value = f.Evaluate(result.selection);

  Points endpoints;
  for (const Trajectory& t : result.selection) endpoints.push_back(t.endpoint);
  result.connected = IsConnected(BuildProximityGraph(endpoints, comm_radius));
  return result;
}

OptimumResult BruteForceOptimum(const SetFunction& f,
                                const PartitionedGroundSet& ground,
                                std::uint64_t max_assignments) {
  RequireNonEmptyGroups(ground);
  const int n = ground.num_robots();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= ground.group(i).size();
    if (total > max_assignments) {
      throw std::length_error("brute force over more than " +
                              std::to_string(max_assignments) + " assignments");
    }
  }

  // Mixed-radix counter over group indices; lexicographic order keeps the
  // first maximizer, matching the greedy tie-break.
  std::vector<std::size_t> digits(n, 0);
  Selection current(n);
  OptimumResult best;
  best.value = -1.0;
  for (std::uint64_t step = 0; step < total; ++step) {
    for (int i = 0; i < n; ++i) current[i] = ground.group(i)[digits[i]];
    const double value = f.Evaluate(current);
    if (value > best.value) {
      best.value = value;
      best.selection = current;
    }
    for (int i = n - 1; i >= 0; --i) {
      if (++digits[i] < ground.group(i).size()) break;
      digits[i] = 0;
    }
  }
  return best;
}

}  // namespace csm
