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

#include "csm/planner.h"

#include <chrono>
#include <stdexcept>

#include "csm/coverage.h"
#include "csm/seeding.h"
#include "csm/weights.h"

namespace csm {
namespace {

Points Endpoints(const Selection& selection) {
  Points out;
  out.reserve(selection.size());
  for (const Trajectory& t : selection) out.push_back(t.endpoint);
  return out;
}

}  // namespace

EpochPlan PlanEpoch(const WorldState& world, const ScenarioConfig& config,
                    Algorithm algorithm) {
  const auto started = std::chrono::steady_clock::now();
  const Points current = world.RobotPositions();
  const ProximityGraph start_graph = BuildProximityGraph(current, config.comm_radius);
  if (algorithm == Algorithm::kProposed && !IsConnected(start_graph)) {
    throw std::invalid_argument("proposed planner needs a connected team");
  }

  EpochPlan plan;
  plan.predicted.reserve(world.estimates.size());
  Points predicted_means;
  for (const TargetEstimate& e : world.estimates) {
    plan.predicted.push_back(KfPredict(e, config.process_noise_std));
    predicted_means.push_back(plan.predicted.back().mean);
  }
  const CoverageObjective f(std::move(predicted_means), config.sensor_radius);

  std::vector<std::vector<Trajectory>> groups;
  for (const RobotState& robot : world.robots) {
    groups.push_back(
        DiscretizeReachable(robot, config.radial_steps, config.angular_step_deg));
  }
  const PartitionedGroundSet ground(std::move(groups));
  const GreedyResult greedy = GreedyPartitionMatroid(f, ground);
  plan.greedy_endpoints = Endpoints(greedy.selection);

  switch (algorithm) {
    case Algorithm::kGreedy:
      plan.positions = plan.greedy_endpoints;
      break;
    case Algorithm::kSgg:
      plan.positions =
          Endpoints(SequentialGraphGreedy(f, ground, config.comm_radius).selection);
      break;
    case Algorithm::kProposed: {
      const auto topology = WeightedCompleteGraph::FromEndpoints(
          plan.greedy_endpoints, config.comm_radius);
      const SpanningTree tree = MinimumSpanningTree(topology);

      WeightOptions weight_options;
      weight_options.samples = config.weight3_samples;
      weight_options.sample_radius = config.weight3_radius;
      weight_options.seed = DeriveSeed(world.round_seed, "weight3",
                                       {static_cast<std::uint64_t>(world.epoch)});
      plan.weights =
          ComputeWeights(config.weight_scheme, greedy.selection, f, weight_options);

      DeviationProblem problem;
      problem.current = current;
      problem.greedy = plan.greedy_endpoints;
      for (const RobotState& r : world.robots) problem.reach.push_back(r.reach);
      problem.weights = plan.weights;
      problem.tree = tree.edges;
      problem.comm_radius = config.comm_radius;
      problem.safety_radius = config.safety_radius;
      problem.mode = config.objective_mode;

      SolverOptions options;
      options.num_starts = config.solver_starts;
      options.outer_rounds = config.solver_outer_rounds;
      options.inner_iterations = config.solver_inner_iterations;
      options.seed = DeriveSeed(world.round_seed, "solver",
                                {static_cast<std::uint64_t>(world.epoch)});
      DeviationSolution solution = SolveDeviation(problem, options);
      if (solution.status == DeviationStatus::kInfeasibleReported ||
          !IsConnected(BuildProximityGraph(solution.positions, config.comm_radius))) {
        solution = FeasibilityFallback(problem, start_graph);
      }
      if (!IsConnected(BuildProximityGraph(solution.positions, config.comm_radius))) {
        throw InfeasibleEpochError("no connected end-of-epoch configuration");
      }
      plan.positions = solution.positions;
      plan.tree = solution.tree;
      plan.metrics.deviation_status = solution.status;
      break;
    }
  }

  plan.graph = BuildProximityGraph(plan.positions, config.comm_radius);
  plan.targets_after =
      AdvanceTargets(world.targets, config.arena_width, config.arena_height);

  Points truth;
  truth.reserve(plan.targets_after.size());
  for (const TargetState& t : plan.targets_after) truth.push_back(t.position);
  EpochMetrics& m = plan.metrics;
  m.observed = CountCovered(truth, plan.positions, config.sensor_radius);
  m.objective = f.EvaluateAt(plan.positions);
  m.greedy_objective = greedy.value;
  m.connected = IsConnected(plan.graph);
  for (std::size_t i = 0; i < plan.positions.size(); ++i) {
    m.deviation += Distance(plan.positions[i], plan.greedy_endpoints[i]);
  }
  m.solve_seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - started)
                        .count();
  return plan;
}

}  // namespace csm
