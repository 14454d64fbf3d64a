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

#include "csm/oracles.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

#include "csm/coverage.h"
#include "csm/deviation.h"
#include "csm/reachable.h"
#include "csm/seeding.h"
#include "csm/submodular.h"

namespace csm {
namespace {

SpanningTree DecodePruefer(const std::vector<int>& code, int n) {
  SpanningTree tree{n, {}};
  std::vector<int> degree(n, 1);
  for (int a : code) ++degree[a];
  for (int a : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        tree.edges.push_back(Edge::Of(leaf, a));
        --degree[leaf];
        --degree[a];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      tree.edges.push_back(Edge::Of(u, v));
      break;
    }
  }
  return tree;
}

std::string Format(const char* fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

CheckOutcome CheckGreedyBound(std::mt19937_64& rng, int trials) {
  std::uniform_int_distribution<int> robots(1, 4);
  std::uniform_real_distribution<double> coord(0.0, 20.0);
  int violations = 0;
  double worst = 1.0;
  for (int t = 0; t < trials; ++t) {
    Points targets(30);
    for (Point& p : targets) p = Point(coord(rng), coord(rng));
    const CoverageObjective f(targets, 3.0);
    std::vector<std::vector<Trajectory>> groups;
    const int n = robots(rng);
    for (int i = 0; i < n; ++i) {
      groups.push_back(DiscretizeReachable({i, Point(coord(rng), coord(rng)), 4.0, 3.0}, 1, 90));
    }
    const PartitionedGroundSet ground(groups);
    const double greedy = GreedyPartitionMatroid(f, ground).value;
    const double best = BruteForceOptimum(f, ground).value;
    if (greedy > best || greedy < 0.5 * best) ++violations;
    if (best > 0) worst = std::min(worst, greedy / best);
  }
  return {"greedy >= 0.5 * optimum", violations == 0,
          Format("worst ratio %.3f over %.0f instances", worst, trials)};
}

CheckOutcome CheckMst(std::mt19937_64& rng, int trials) {
  std::uniform_int_distribution<int> size(2, 6);
  std::uniform_real_distribution<double> weight(0.0, 5.0);
  int violations = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = size(rng);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) w(i, j) = w(j, i) = std::round(weight(rng) * 4) / 4;
    }
    const WeightedCompleteGraph graph(w);
    const SpanningTree mst = MinimumSpanningTree(graph);
    double best_total = 1e300, best_bottleneck = 1e300;
    for (const SpanningTree& tree : EnumerateSpanningTrees(n)) {
      best_total = std::min(best_total, TotalWeight(tree, graph));
      best_bottleneck = std::min(best_bottleneck, Bottleneck(tree, graph));
    }
    if (!IsSpanningTree(mst) || TotalWeight(mst, graph) > best_total + 1e-12 ||
        Bottleneck(mst, graph) > best_bottleneck + 1e-12) {
      ++violations;
    }
  }
  return {"MST total and bottleneck minimal", violations == 0,
          Format("%.0f violations over %.0f graphs", violations, trials)};
}

CheckOutcome CheckSubmodularity(std::mt19937_64& rng, int trials) {
  std::uniform_real_distribution<double> coord(0.0, 15.0);
  Points targets(40);
  for (Point& p : targets) p = Point(coord(rng), coord(rng));
  const CoverageObjective f(targets, 3.0);
  std::bernoulli_distribution coin(0.5);
  int violations = 0;
  for (int t = 0; t < trials; ++t) {
    Selection pool;
    for (int k = 0; k < 8; ++k) pool.push_back({k, 0, Point(coord(rng), coord(rng))});
    Selection small, large;
    for (int k = 0; k < 7; ++k) {
      if (coin(rng)) {
        large.push_back(pool[k]);
        if (coin(rng)) small.push_back(pool[k]);
      }
    }
    const Trajectory& s = pool[7];
    if (f.Evaluate(small) > f.Evaluate(large) ||
        MarginalGain(f, s, small) < MarginalGain(f, s, large)) {
      ++violations;
    }
  }
  return {"coverage monotone and submodular", violations == 0,
          Format("%.0f violations over %.0f triples", violations, trials)};
}

CheckOutcome CheckDeviation(std::mt19937_64& rng, int trials) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int violations = 0, feasible = 0;
  for (int t = 0; t < trials; ++t) {
    DeviationProblem p;
    p.comm_radius = 3.0;
    p.safety_radius = 0.5;
    p.mode = t % 2 == 0 ? ObjectiveMode::kSquaredNorm : ObjectiveMode::kNorm;
    const double reach = 1.5;
    for (int i = 0; i < 2; ++i) {
      const Point c(i * (2.5 + 2.0 * unit(rng)), unit(rng));
      const double r = reach * std::sqrt(unit(rng));
      const double a = 2.0 * 3.141592653589793 * unit(rng);
      p.current.push_back(c);
      p.greedy.push_back(c + r * Point(std::cos(a), std::sin(a)));
      p.reach.push_back(reach);
      p.weights.push_back(0.2 + unit(rng));
    }
    p.tree = {{0, 1}};
    const double resolution = 0.1;
    const DeviationSolution grid = GridOracle(p, resolution);
    if (grid.status == DeviationStatus::kInfeasibleReported) continue;
    ++feasible;
    const DeviationSolution s = SolveDeviation(p);
    if (s.status == DeviationStatus::kInfeasibleReported || s.residuals.Max() > 1e-6 ||
        s.objective > 1.05 * grid.objective + resolution) {
      ++violations;
    }
  }
  return {"deviation solver within 5% of grid oracle", violations == 0,
          Format("%.0f violations over %.0f feasible instances", violations, feasible)};
}

}  // namespace

std::vector<SpanningTree> EnumerateSpanningTrees(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration supports 1 <= n <= 8");
  if (n == 1) return {SpanningTree{1, {}}};
  if (n == 2) return {SpanningTree{2, {{0, 1}}}};
  std::vector<SpanningTree> out;
  std::vector<int> code(n - 2, 0);
  while (true) {
    out.push_back(DecodePruefer(code, n));
    int k = n - 3;
    while (k >= 0 && ++code[k] == n) code[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

std::vector<CheckOutcome> RunSelfChecks(std::uint64_t seed, int trials) {
  std::vector<CheckOutcome> out;
  std::mt19937_64 rng(DeriveSeed(seed, "self-check"));
  out.push_back(CheckGreedyBound(rng, trials));
  out.push_back(CheckMst(rng, trials));
  out.push_back(CheckSubmodularity(rng, 10 * trials));
  out.push_back(CheckDeviation(rng, std::max(1, trials / 4)));
  return out;
}

}  // namespace csm
