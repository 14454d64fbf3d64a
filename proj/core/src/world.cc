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

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "csm/coverage.h"
#include "csm/planner.h"
#include "csm/seeding.h"

namespace csm {

std::string_view ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kProposed:
      return "proposed";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kSgg:
      return "sgg";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "proposed") return Algorithm::kProposed;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "sgg") return Algorithm::kSgg;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

Points WorldState::RobotPositions() const {
  Points out;
  out.reserve(robots.size());
  for (const RobotState& r : robots) out.push_back(r.position);
  return out;
}

WorldState InitWorld(const ScenarioConfig& config, int round) {
  WorldState world;
  world.round_seed =
      DeriveSeed(config.seed, "round", {static_cast<std::uint64_t>(round)});

  const int n = config.num_robots;
  const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  const int rows = (n + cols - 1) / cols;
  const double spacing = config.initial_spacing * config.comm_radius;
  const Point center(0.5 * config.arena_width, 0.5 * config.arena_height);
  for (int k = 0; k < n; ++k) {
    const int row = k / cols;
    int col = k % cols;
    if (row % 2 == 1) col = cols - 1 - col;
    RobotState robot;
    robot.id = k;
    robot.position = center + spacing * Point(col - 0.5 * (cols - 1),
                                              row - 0.5 * (rows - 1));
    robot.reach = config.reach;
    robot.sensor_radius = config.sensor_radius;
    world.robots.push_back(robot);
  }

  std::mt19937_64 target_rng(DeriveSeed(world.round_seed, "targets"));
  std::uniform_real_distribution<double> xs(0.0, config.arena_width);
  std::uniform_real_distribution<double> ys(0.0, config.arena_height);
  std::uniform_real_distribution<double> vs(-config.max_target_speed,
                                            config.max_target_speed);
  std::mt19937_64 prior_rng(DeriveSeed(world.round_seed, "prior"));
  std::normal_distribution<double> noise(0.0, config.noise_std);
  for (int j = 0; j < config.num_targets; ++j) {
    TargetState t;
    t.id = j;
    t.position = Point(xs(target_rng), ys(target_rng));
    t.velocity = Point(vs(target_rng), vs(target_rng));
    world.targets.push_back(t);

    TargetEstimate e;
    e.id = j;
    const Point sighting = t.position + Point(noise(prior_rng), noise(prior_rng));
    e.mean = sighting;
    e.covariance = config.noise_std * config.noise_std * Eigen::Matrix2d::Identity();
    e.last_measurement = sighting;
    e.last_observed = 0;
    world.estimates.push_back(e);
  }
  return world;
}

std::vector<TargetState> AdvanceTargets(std::vector<TargetState> targets,
                                        double width, double height) {
  auto reflect = [](double& p, double& v, double hi) {
    p += v;
    if (p < 0.0) {
      p = -p;
      v = -v;
    } else if (p > hi) {
      p = 2.0 * hi - p;
      v = -v;
    }
    p = std::clamp(p, 0.0, hi);
  };
  for (TargetState& t : targets) {
    reflect(t.position.x(), t.velocity.x(), width);
    reflect(t.position.y(), t.velocity.y(), height);
  }
  return targets;
}

void ApplyEpoch(WorldState& world, const EpochPlan& plan,
                const ScenarioConfig& config) {
  for (std::size_t i = 0; i < world.robots.size(); ++i) {
    world.robots[i].position = plan.positions[i];
  }
  world.targets = plan.targets_after;
  world.estimates = plan.predicted;

  const int time = world.epoch + 1;
  const double r2 = config.sensor_radius * config.sensor_radius;
  for (std::size_t j = 0; j < world.targets.size(); ++j) {
    const Point& truth = world.targets[j].position;
    const bool seen = std::any_of(plan.positions.begin(), plan.positions.end(),
                                  [&](const Point& x) { return (x - truth).squaredNorm() <= r2; });
    if (!seen) continue;
    // Noise depends only on (round, epoch, target): every algorithm sees the
    // same draw for the same sighting.
    std::mt19937_64 rng(DeriveSeed(world.round_seed, "measurement",
                                   {static_cast<std::uint64_t>(world.epoch),
                                    static_cast<std::uint64_t>(j)}));
    std::normal_distribution<double> noise(0.0, config.noise_std);
    const Point z = truth + Point(noise(rng), noise(rng));
    world.estimates[j] = KfUpdate(world.estimates[j], z, config.noise_std, time);
  }
  ++world.epoch;
}

}  // namespace csm
