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

#include "csm/coverage.h"

#include <random>

#include "csm/reachable.h"
#include "csm/weights.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace csm {
namespace {

TEST(CoverageTest, EmptySelectionCoversNothing) {
  const CoverageObjective f({Point(0, 0), Point(1, 1)}, 2.0);
  EXPECT_DOUBLE_EQ(f.Evaluate(Selection{}), 0.0);
  EXPECT_EQ(CountCovered(f.targets(), {}, 2.0), 0);
}

TEST(CoverageTest, FootprintIsClosedDisk) {
  const CoverageObjective f({Point(3, 0), Point(3.0001, 0)}, 3.0);
  EXPECT_DOUBLE_EQ(f.EvaluateAt(Points{Point(0, 0)}), 1.0);
}

TEST(CoverageTest, OverlappingFootprintsCountTargetsOnce) {
  const CoverageObjective f({Point(0, 0), Point(1, 0), Point(5, 0)}, 1.5);
  const Selection twice = {{0, 0, Point(0.5, 0)}, {1, 0, Point(0.5, 0)}};
  EXPECT_DOUBLE_EQ(f.Evaluate(twice), 2.0);
}

TEST(CoverageTest, DuplicateTargetsCountSeparately) {
  const CoverageObjective f({Point(0, 0), Point(0, 0)}, 1.0);
  EXPECT_DOUBLE_EQ(f.EvaluateAt(Points{Point(0, 0)}), 2.0);
}

TEST(CoverageTest, MatchesUnionRecount) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coord(0.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    Points targets(20), sensors(3);
    for (Point& p : targets) p = Point(coord(rng), coord(rng));
    for (Point& p : sensors) p = Point(coord(rng), coord(rng));
    const CoverageObjective f(targets, 4.0);
    EXPECT_EQ(f.EvaluateAt(sensors), testing::UnionRecount(targets, sensors, 4.0));
  }
}

TEST(CoverageTest, RejectsNonPositiveRadius) {
  EXPECT_THROW(CoverageObjective({}, 0.0), std::invalid_argument);
}

TEST(CoverageTest, MonotoneAndSubmodularOnRandomTriples) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> coord(0.0, 12.0);
  std::bernoulli_distribution coin(0.5);
  int checks = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Points targets(15);
    for (Point& p : targets) p = Point(coord(rng), coord(rng));
    const CoverageObjective f(targets, 2.0);
    Selection small, large;
    for (int k = 0; k < 5; ++k) {
      if (!coin(rng)) continue;
      const Trajectory t{k, 0, Point(coord(rng), coord(rng))};
      large.push_back(t);
      if (coin(rng)) small.push_back(t);
    }
    const Trajectory s{5, 0, Point(coord(rng), coord(rng))};
    EXPECT_LE(f.Evaluate(small), f.Evaluate(large));
    EXPECT_GE(MarginalGain(f, s, small), MarginalGain(f, s, large));
    ++checks;
  }
  EXPECT_EQ(checks, 1000);
}

TEST(ReachableTest, DefaultDiscretizationHas37Endpoints) {
  const RobotState robot{2, Point(5, 5), 4.0, 5.0};
  const auto trajs = DiscretizeReachable(robot, 3, 30);
  ASSERT_EQ(trajs.size(), 37u);
  EXPECT_EQ(trajs[0].endpoint, robot.position);
  double outer = 0.0;
  for (std::size_t k = 0; k < trajs.size(); ++k) {
    EXPECT_EQ(trajs[k].robot_id, 2);
    EXPECT_EQ(trajs[k].traj_id, static_cast<int>(k));
    const double d = Distance(trajs[k].endpoint, robot.position);
    EXPECT_LE(d, 4.0 + 1e-12);
    outer = std::max(outer, d);
  }
  EXPECT_NEAR(outer, 4.0, 1e-12);
  // First ring sits at R/3 along +x.
  EXPECT_NEAR((trajs[1].endpoint - Point(5 + 4.0 / 3, 5)).norm(), 0.0, 1e-12);
}

TEST(ReachableTest, OneRingAtRightAngles) {
  const auto trajs = DiscretizeReachable({0, Point(0, 0), 2.0, 1.0}, 1, 90);
  ASSERT_EQ(trajs.size(), 5u);
  EXPECT_NEAR((trajs[2].endpoint - Point(0, 2)).norm(), 0.0, 1e-12);
  EXPECT_NEAR((trajs[3].endpoint - Point(-2, 0)).norm(), 0.0, 1e-12);
}

TEST(ReachableTest, RejectsBadSteps) {
  const RobotState robot;
  EXPECT_THROW(DiscretizeReachable(robot, 0, 30), std::invalid_argument);
  EXPECT_THROW(DiscretizeReachable(robot, 3, 0), std::invalid_argument);
  EXPECT_THROW(DiscretizeReachable(robot, 3, 7), std::invalid_argument);
  EXPECT_THROW(DiscretizeReachable({0, Point(0, 0), 0.0, 1.0}, 3, 30), std::invalid_argument);
}

TEST(WeightsTest, SoloWeightIsSingletonCoverage) {
  const CoverageObjective f({Point(0, 0), Point(0.5, 0), Point(20, 20)}, 1.0);
  const Selection s = {{0, 0, Point(0, 0)}, {1, 0, Point(10, 10)}};
  EXPECT_EQ(ComputeWeights(WeightScheme::kSolo, s, f), (std::vector<double>{2.0, 0.0}));
}

TEST(WeightsTest, MarginalWeightIsZeroForFullyOverlappedRobot) {
  const CoverageObjective f({Point(0, 0), Point(0.5, 0)}, 1.0);
  const Selection s = {{0, 0, Point(0, 0)}, {1, 0, Point(0.2, 0)}, {2, 0, Point(9, 9)}};
  const auto marginal = ComputeWeights(WeightScheme::kMarginal, s, f);
  const auto solo = ComputeWeights(WeightScheme::kSolo, s, f);
  EXPECT_EQ(marginal, (std::vector<double>{0.0, 0.0, 0.0}));
  EXPECT_GT(solo[0], 0.0);
  EXPECT_GT(solo[1], 0.0);
}

TEST(WeightsTest, VariationIsZeroOnFlatField) {
  const CoverageObjective empty({}, 1.0);
  const Selection s = {{0, 0, Point(0, 0)}, {1, 0, Point(3, 0)}};
  EXPECT_EQ(ComputeWeights(WeightScheme::kVariation, s, empty),
            (std::vector<double>{0.0, 0.0}));
  // Every probe within 1 m still sees all targets.
  const CoverageObjective wide({Point(0, 0)}, 10.0);
  EXPECT_EQ(ComputeWeights(WeightScheme::kVariation, s, wide),
            (std::vector<double>{0.0, 0.0}));
}

TEST(WeightsTest, VariationDetectsEdgeOfFootprintAndIsSeeded) {
  Points targets;
  for (int k = 0; k < 10; ++k) targets.emplace_back(0.95, 0.0);
  const CoverageObjective f(targets, 1.0);
  const Selection s = {{0, 0, Point(0, 0)}};
  WeightOptions opts;
  opts.samples = 64;
  opts.seed = 9;
  const auto a = ComputeWeights(WeightScheme::kVariation, s, f, opts);
  const auto b = ComputeWeights(WeightScheme::kVariation, s, f, opts);
  EXPECT_EQ(a, b);
  EXPECT_DOUBLE_EQ(a[0], 10.0);
  opts.samples = 0;
  EXPECT_THROW(ComputeWeights(WeightScheme::kVariation, s, f, opts), std::invalid_argument);
}

TEST(WeightsTest, SchemeNamesRoundTrip) {
  for (WeightScheme w : {WeightScheme::kSolo, WeightScheme::kMarginal, WeightScheme::kVariation}) {
    EXPECT_EQ(ParseWeightScheme(ToString(w)), w);
  }
  EXPECT_THROW(ParseWeightScheme("weight4"), std::invalid_argument);
}

}  // namespace
}  // namespace csm
