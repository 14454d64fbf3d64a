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

#include "csm/deviation.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "csm/seeding.h"

namespace csm {
namespace {

using Vec = Eigen::VectorXd;

double LengthScale(const DeviationProblem& p) {
  return std::max(1.0, p.comm_radius);
}

Vec Flatten(const Points& points) {
  Vec x(2 * points.size());
  for (std::size_t i = 0; i < points.size(); ++i) x.segment<2>(2 * i) = points[i];
  return x;
}

Points Unflatten(const Vec& x) {
  Points points(x.size() / 2);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = x.segment<2>(2 * i);
  return points;
}

// Unit vector from b to a; a fixed direction when the points coincide so that
// coincident robots are still pushed apart.
Point UnitFrom(const Point& b, const Point& a, double* dist) {
  const Point d = a - b;
  *dist = d.norm();
  if (*dist > 0.0) return d / *dist;
  return Point(1.0, 0.0);
}

// Shrunk bounds used while solving so that the returned positions meet the
// true bounds exactly, not just within tolerance.
struct Targets {
  double comm;
  double safety;
  std::vector<double> reach;
};

Targets MakeTargets(const DeviationProblem& p) {
  const double margin = 1e-7 * LengthScale(p);
  Targets t;
  t.comm = p.comm_radius - margin;
  t.safety = p.safety_radius > 0.0 ? p.safety_radius + margin : 0.0;
  for (double r : p.reach) t.reach.push_back(r * (1.0 - 1e-12));
  return t;
}

void ProjectOntoDisks(const DeviationProblem& p, const Targets& t, Vec& x) {
  for (int i = 0; i < p.size(); ++i) {
    const Point d = x.segment<2>(2 * i) - p.current[i];
    const double n = d.norm();
    if (n > t.reach[i]) {
      x.segment<2>(2 * i) = p.current[i] + d * (t.reach[i] / n);
    }
  }
}

class AugmentedLagrangian {
 public:
  AugmentedLagrangian(const DeviationProblem& p, const Targets& t,
                      std::vector<double> weights, double smoothing, double mu)
      : p_(p),
        t_(t),
        weights_(std::move(weights)),
        eps_(smoothing),
        mu_(mu),
        edge_mult_(p.tree.size(), 0.0) {
    if (p.safety_radius > 0.0) {
      for (int i = 0; i < p.size(); ++i) {
        for (int j = i + 1; j < p.size(); ++j) pairs_.push_back({i, j});
      }
    }
    pair_mult_.assign(pairs_.size(), 0.0);
  }

  double Evaluate(const Vec& x, Vec* grad) const {
    double value = 0.0;
    if (grad) grad->setZero(x.size());
    for (int i = 0; i < p_.size(); ++i) {
      if (weights_[i] == 0.0) continue;
      const Point d = x.segment<2>(2 * i) - p_.greedy[i];
      if (p_.mode == ObjectiveMode::kSquaredNorm) {
        value += weights_[i] * d.squaredNorm();
        if (grad) grad->segment<2>(2 * i) += 2.0 * weights_[i] * d;
      } else {
        const double r = std::sqrt(d.squaredNorm() + eps_ * eps_);
        value += weights_[i] * (r - eps_);
        if (grad) grad->segment<2>(2 * i) += weights_[i] * d / r;
      }
    }
    // PHR terms for g(x) <= 0: (max(0, lambda + mu g)^2 - lambda^2) / (2 mu).
    auto add_term = [&](int i, int j, double g, double lambda, const Point& dgdi) {
      const double active = std::max(0.0, lambda + mu_ * g);
      value += (active * active - lambda * lambda) / (2.0 * mu_);
      if (grad && active > 0.0) {
        grad->segment<2>(2 * i) += active * dgdi;
        grad->segment<2>(2 * j) -= active * dgdi;
      }
    };
    for (std::size_t k = 0; k < p_.tree.size(); ++k) {
      const Edge& e = p_.tree[k];
      double dist = 0.0;
      const Point u = UnitFrom(x.segment<2>(2 * e.v), x.segment<2>(2 * e.u), &dist);
      add_term(e.u, e.v, dist - t_.comm, edge_mult_[k], u);
    }
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const auto [i, j] = pairs_[k];
      double dist = 0.0;
      const Point u = UnitFrom(x.segment<2>(2 * j), x.segment<2>(2 * i), &dist);
      add_term(i, j, t_.safety - dist, pair_mult_[k], -u);
    }
    return value;
  }

  void UpdateMultipliers(const Vec& x) {
    for (std::size_t k = 0; k < p_.tree.size(); ++k) {
      const Edge& e = p_.tree[k];
      const double g =
          (x.segment<2>(2 * e.u) - x.segment<2>(2 * e.v)).norm() - t_.comm;
      edge_mult_[k] = std::max(0.0, edge_mult_[k] + mu_ * g);
    }
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const auto [i, j] = pairs_[k];
      const double g =
          t_.safety - (x.segment<2>(2 * i) - x.segment<2>(2 * j)).norm();
      pair_mult_[k] = std::max(0.0, pair_mult_[k] + mu_ * g);
    }
  }

  void GrowPenalty(double factor) { mu_ *= factor; }

 private:
  const DeviationProblem& p_;
  const Targets& t_;
  std::vector<double> weights_;
  double eps_;
  double mu_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<double> edge_mult_;
  std::vector<double> pair_mult_;
};

// Spectral projected gradient with a non-monotone Armijo search
// (Birgin, Martinez and Raydan). The feasible set is the product of disks.
void MinimizeOverDisks(const AugmentedLagrangian& al, const DeviationProblem& p,
                       const Targets& t, Vec& x, int max_iterations) {
  constexpr int kMemory = 10;
  constexpr double kAlphaMin = 1e-10;
  constexpr double kAlphaMax = 1e10;
  const double step_floor = 1e-13 * LengthScale(p);

  ProjectOntoDisks(p, t, x);
  Vec grad(x.size());
  double value = al.Evaluate(x, &grad);
  std::deque<double> history{value};

  Vec trial = x - grad;
  ProjectOntoDisks(p, t, trial);
  const double pg = (trial - x).lpNorm<Eigen::Infinity>();
  double alpha = pg > 0.0 ? std::clamp(1.0 / pg, kAlphaMin, kAlphaMax) : 1.0;

  Vec next_grad(x.size());
  for (int it = 0; it < max_iterations; ++it) {
    Vec direction = x - alpha * grad;
    ProjectOntoDisks(p, t, direction);
    direction -= x;
    if (direction.lpNorm<Eigen::Infinity>() < step_floor) break;

    const double slope = grad.dot(direction);
    const double reference = *std::max_element(history.begin(), history.end());
    double step = 1.0;
    Vec next;
    double next_value = 0.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      next = x + step * direction;
      next_value = al.Evaluate(next, &next_grad);
      if (next_value <= reference + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    const Vec s = next - x;
    const Vec y = next_grad - grad;
    const double sy = s.dot(y);
    alpha = sy > 0.0 ? std::clamp(s.squaredNorm() / sy, kAlphaMin, kAlphaMax)
                     : kAlphaMax;
    x = std::move(next);
    grad = next_grad;
    value = next_value;
    history.push_back(value);
    if (history.size() > kMemory) history.pop_front();
  }
}

// Cyclic projections onto each violated tree edge and safety pair followed
// by the reach disks. Returns true once a full sweep finds nothing to fix.
bool Repair(const DeviationProblem& p, const Targets& t, Vec& x) {
  const double slack = 0.5e-7 * LengthScale(p);
  constexpr int kSweeps = 5000;
  for (int sweep = 0; sweep < kSweeps; ++sweep) {
    bool clean = true;
    for (const Edge& e : p.tree) {
      double dist = 0.0;
      const Point u = UnitFrom(x.segment<2>(2 * e.v), x.segment<2>(2 * e.u), &dist);
      if (dist > t.comm + slack) {
        clean = false;
        const double half = 0.5 * (dist - t.comm);
        x.segment<2>(2 * e.u) -= half * u;
        x.segment<2>(2 * e.v) += half * u;
      }
    }
    if (p.safety_radius > 0.0) {
      for (int i = 0; i < p.size(); ++i) {
        for (int j = i + 1; j < p.size(); ++j) {
          double dist = 0.0;
          const Point u = UnitFrom(x.segment<2>(2 * j), x.segment<2>(2 * i), &dist);
          if (dist < t.safety - slack) {
            clean = false;
            const double half = 0.5 * (t.safety - dist);
            x.segment<2>(2 * i) += half * u;
            x.segment<2>(2 * j) -= half * u;
          }
        }
      }
    }
    ProjectOntoDisks(p, t, x);
    if (clean) return true;
  }
  return false;
}

std::vector<double> NormalizedWeights(const std::vector<double>& w) {
  const double top = w.empty() ? 0.0 : *std::max_element(w.begin(), w.end());
  std::vector<double> out(w.size(), 0.0);
  if (top > 0.0) {
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] / top;
  }
  return out;
}

DeviationSolution Finish(const DeviationProblem& p, Points positions,
                         DeviationStatus status, std::vector<Edge> tree) {
  DeviationSolution s;
  s.objective = DeviationObjective(p, positions);
  s.residuals = ComputeResiduals(p, positions, tree);
  s.positions = std::move(positions);
  s.status = status;
  s.tree = std::move(tree);
  return s;
}

}  // namespace

std::string_view ToString(ObjectiveMode mode) {
  return mode == ObjectiveMode::kNorm ? "norm" : "squared_norm";
}

ObjectiveMode ParseObjectiveMode(std::string_view name) {
  if (name == "norm") return ObjectiveMode::kNorm;
  if (name == "squared_norm") return ObjectiveMode::kSquaredNorm;
  throw std::invalid_argument("unknown objective mode '" + std::string(name) + "'");
}

std::string_view ToString(DeviationStatus status) {
  switch (status) {
    case DeviationStatus::kOptimalLocal:
      return "optimal_local";
    case DeviationStatus::kFallback:
      return "fallback";
    case DeviationStatus::kInfeasibleReported:
      return "infeasible_reported";
  }
  return "unknown";
}

void DeviationProblem::Validate() const {
  const std::size_t n = current.size();
  if (n == 0) throw std::invalid_argument("deviation problem has no robots");
  if (greedy.size() != n || reach.size() != n || weights.size() != n) {
    throw std::invalid_argument("deviation problem arrays differ in length");
  }
  if (!(safety_radius >= 0.0) || !(comm_radius > safety_radius)) {
    throw std::invalid_argument("need comm_radius > safety_radius >= 0");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string who = "robot " + std::to_string(i);
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
      throw std::invalid_argument(who + " has a negative or non-finite weight");
    }
    if (!(reach[i] >= 0.0)) {
      throw std::invalid_argument(who + " has a negative reach");
    }
    if (Distance(greedy[i], current[i]) > reach[i] + 1e-9 * std::max(1.0, reach[i])) {
      throw std::invalid_argument(who + " greedy endpoint lies outside its reach");
    }
  }
  if (!IsSpanningTree({static_cast<int>(n), tree})) {
    throw std::invalid_argument("tree edges do not form a spanning tree");
  }
}

double ConstraintResiduals::Max() const { return std::max({tree, reach, safety}); }

double DeviationObjective(const DeviationProblem& p, const Points& positions) {
  double total = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    const double d = Distance(positions[i], p.greedy[i]);
    total += p.weights[i] * (p.mode == ObjectiveMode::kNorm ? d : d * d);
  }
  return total;
}

ConstraintResiduals ComputeResiduals(const DeviationProblem& p,
                                     const Points& positions,
                                     const std::vector<Edge>& tree) {
  ConstraintResiduals r;
  for (const Edge& e : tree) {
    r.tree = std::max(r.tree, Distance(positions[e.u], positions[e.v]) - p.comm_radius);
  }
  for (int i = 0; i < p.size(); ++i) {
    r.reach = std::max(r.reach, Distance(positions[i], p.current[i]) - p.reach[i]);
    for (int j = i + 1; j < p.size(); ++j) {
      r.safety = std::max(r.safety, p.safety_radius - Distance(positions[i], positions[j]));
    }
  }
  return r;
}

DeviationSolution SolveDeviation(const DeviationProblem& p,
                                 const SolverOptions& options) {
  p.Validate();
  const double tol = options.tol * LengthScale(p);
  auto feasible = [&](const Points& x) {
    return ComputeResiduals(p, x).Max() <= tol;
  };

  // Greedy endpoints that already satisfy everything are optimal.
  if (feasible(p.greedy)) {
    return Finish(p, p.greedy, DeviationStatus::kOptimalLocal, p.tree);
  }

  const Targets targets = MakeTargets(p);
  const std::vector<double> weights = NormalizedWeights(p.weights);

  std::vector<Vec> starts;
  starts.push_back(Flatten(p.greedy));
  if (options.num_starts > 1) starts.push_back(Flatten(p.current));
  for (int k = 2; k < options.num_starts; ++k) {
    std::mt19937_64 rng(DeriveSeed(options.seed, "deviation-start", {std::uint64_t(k)}));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Points mix(p.size());
    for (int i = 0; i < p.size(); ++i) {
      const double a = unit(rng);
      mix[i] = a * p.greedy[i] + (1.0 - a) * p.current[i];
    }
    starts.push_back(Flatten(mix));
  }

  std::optional<Points> best;
  double best_objective = std::numeric_limits<double>::infinity();
  auto consider = [&](const Points& x) {
    if (!feasible(x)) return;
    const double obj = DeviationObjective(p, x);
    // Later candidates must win clearly so near-ties keep the earlier start.
    if (!best || obj < best_objective - 1e-9 * std::max(1.0, best_objective)) {
      best = x;
      best_objective = obj;
    }
  };

  for (const Vec& start : starts) {
    consider(Unflatten(start));
    Vec x = start;
    AugmentedLagrangian al(p, targets, weights, options.norm_smoothing,
                           options.initial_penalty);
    for (int round = 0; round < options.outer_rounds; ++round) {
      MinimizeOverDisks(al, p, targets, x, options.inner_iterations);
      al.UpdateMultipliers(x);
      al.GrowPenalty(options.penalty_growth);
    }
    Repair(p, targets, x);
    consider(Unflatten(x));
  }

  if (!best) {
    return Finish(p, p.current, DeviationStatus::kInfeasibleReported, p.tree);
  }
  return Finish(p, *best, DeviationStatus::kOptimalLocal, p.tree);
}

DeviationSolution GridOracle(const DeviationProblem& p, double resolution,
                             std::uint64_t max_combinations) {
  p.Validate();
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  const int n = p.size();

  struct GridPoint {
    Point position;
    double cost;
  };
  std::vector<std::vector<GridPoint>> grids(n);
  double combos = 1.0;
  for (int i = 0; i < n; ++i) {
    const int steps = static_cast<int>(std::floor(p.reach[i] / resolution));
    // The lattice holds at least pi (steps - 1)^2 points; refuse before
    // allocating anything that large.
    const double at_least = std::numbers::pi * std::max(0, steps - 1) * std::max(0, steps - 1);
    if (combos * std::max(1.0, at_least) > static_cast<double>(max_combinations)) {
      throw std::length_error("grid oracle would enumerate more than " +
                              std::to_string(max_combinations) + " combinations");
    }
    auto add = [&](const Point& x) {
      const double d = Distance(x, p.greedy[i]);
      grids[i].push_back({x, p.weights[i] * (p.mode == ObjectiveMode::kNorm ? d : d * d)});
    };
    add(p.greedy[i]);
    for (int a = -steps; a <= steps; ++a) {
      for (int b = -steps; b <= steps; ++b) {
        const Point offset(a * resolution, b * resolution);
        if (offset.norm() <= p.reach[i]) add(p.current[i] + offset);
      }
    }
    std::stable_sort(grids[i].begin(), grids[i].end(),
                     [](const GridPoint& l, const GridPoint& r) { return l.cost < r.cost; });
    combos *= static_cast<double>(grids[i].size());
    if (combos > static_cast<double>(max_combinations)) {
      throw std::length_error("grid oracle would enumerate more than " +
                              std::to_string(max_combinations) + " combinations");
    }
  }

  // Tree neighbours with a smaller index, checked when robot i is placed.
  std::vector<std::vector<int>> earlier(n);
  for (const Edge& e : p.tree) earlier[e.v].push_back(e.u);

  Points chosen(n);
  Points best_positions;
  double best = std::numeric_limits<double>::infinity();
  // Depth-first over robots with points in ascending cost; costs are
  // non-negative, so the partial sum bounds every completion.
  auto search = [&](auto&& self, int i, double partial) -> void {
    if (i == n) {
      best = partial;
      best_positions = chosen;
      return;
    }
    for (const GridPoint& g : grids[i]) {
      const double total = partial + g.cost;
      if (total >= best) break;
      bool ok = true;
      for (int j : earlier[i]) {
        if (Distance(g.position, chosen[j]) > p.comm_radius) ok = false;
      }
      for (int j = 0; ok && j < i; ++j) {
        if (Distance(g.position, chosen[j]) < p.safety_radius) ok = false;
      }
      if (!ok) continue;
      chosen[i] = g.position;
      self(self, i + 1, total);
    }
  };
  search(search, 0, 0.0);

  if (best_positions.empty()) {
    return Finish(p, p.current, DeviationStatus::kInfeasibleReported, p.tree);
  }
  return Finish(p, best_positions, DeviationStatus::kOptimalLocal, p.tree);
}

DeviationSolution FeasibilityFallback(const DeviationProblem& p,
                                      const ProximityGraph& current_graph) {
  p.Validate();
  if (current_graph.size() != p.size()) {
    throw std::invalid_argument("current graph does not match the problem size");
  }
  if (!IsConnected(current_graph)) {
    throw std::invalid_argument("fallback needs a connected current graph");
  }
  const bool tree_holds = std::all_of(p.tree.begin(), p.tree.end(), [&](const Edge& e) {
    return Distance(p.current[e.u], p.current[e.v]) <= p.comm_radius;
  });
  std::vector<Edge> tree = tree_holds ? p.tree : SpanningTreeOf(current_graph).edges;
  return Finish(p, p.current, DeviationStatus::kFallback, std::move(tree));
}

}  // namespace csm
