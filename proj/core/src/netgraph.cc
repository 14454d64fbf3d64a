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

#include "csm/netgraph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace csm {

DisjointSets::DisjointSets(int n) : parent_(n), size_(n, 1), num_sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::Find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::Union(int a, int b) {
  a = Find(a);
  b = Find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --num_sets_;
  return true;
}

ProximityGraph BuildProximityGraph(const Points& positions, double comm_radius) {
  ProximityGraph g;
  g.positions = positions;
  g.comm_radius = comm_radius;
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (Distance(positions[i], positions[j]) <= comm_radius) {
        g.edges.push_back({i, j});
      }
    }
  }
  return g;
}

bool IsConnected(int num_vertices, std::span<const Edge> edges) {
  if (num_vertices <= 1) return true;
  DisjointSets sets(num_vertices);
  for (const Edge& e : edges) sets.Union(e.u, e.v);
  return sets.num_sets() == 1;
}

double EdgeWeight(const Point& a, const Point& b, double comm_radius) {
  return std::max(0.5 * (Distance(a, b) - comm_radius), 0.0);
}

WeightedCompleteGraph::WeightedCompleteGraph(Eigen::MatrixXd weights)
    : weights_(std::move(weights)) {
  if (weights_.rows() != weights_.cols()) {
    throw std::invalid_argument("weight matrix must be square");
  }
  for (Eigen::Index i = 0; i < weights_.rows(); ++i) {
    if (weights_(i, i) != 0.0) {
      throw std::invalid_argument("weight matrix must have a zero diagonal");
    }
    for (Eigen::Index j = 0; j < i; ++j) {
      if (weights_(i, j) != weights_(j, i)) {
        throw std::invalid_argument("weight matrix must be symmetric");
      }
      if (!(weights_(i, j) >= 0.0)) {
        throw std::invalid_argument("edge weights must be non-negative");
      }
    }
  }
}

WeightedCompleteGraph WeightedCompleteGraph::FromEndpoints(
    const Points& endpoints, double comm_radius) {
  if (!(comm_radius > 0.0)) {
    throw std::invalid_argument("communication radius must be positive");
  }
  const auto n = static_cast<Eigen::Index>(endpoints.size());
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      w(i, j) = w(j, i) = EdgeWeight(endpoints[i], endpoints[j], comm_radius);
    }
  }
  return WeightedCompleteGraph(std::move(w));
}

bool IsSpanningTree(const SpanningTree& tree) {
  const int n = tree.num_vertices;
  if (n <= 0) return false;
  if (static_cast<int>(tree.edges.size()) != n - 1) return false;
  DisjointSets sets(n);
  for (const Edge& e : tree.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) return false;
    if (!sets.Union(e.u, e.v)) return false;
  }
  return sets.num_sets() == 1;
}

SpanningTree MinimumSpanningTree(const WeightedCompleteGraph& graph) {
  const int n = graph.size();
  if (n < 1) throw std::invalid_argument("spanning tree of an empty graph");
  SpanningTree tree{n, {}};
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  std::stable_sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    return std::tuple(graph.weight(a), a.u, a.v) <
           std::tuple(graph.weight(b), b.u, b.v);
  });
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (sets.Union(e.u, e.v)) {
      tree.edges.push_back(e);
      if (static_cast<int>(tree.edges.size()) == n - 1) break;
    }
  }
  return tree;
}

double TotalWeight(const SpanningTree& tree, const WeightedCompleteGraph& graph) {
  double total = 0.0;
  for (const Edge& e : tree.edges) total += graph.weight(e);
  return total;
}

double Bottleneck(const SpanningTree& tree, const WeightedCompleteGraph& graph) {
  double worst = 0.0;
  for (const Edge& e : tree.edges) worst = std::max(worst, graph.weight(e));
  return worst;
}

SpanningTree SpanningTreeOf(const ProximityGraph& graph) {
  const int n = graph.size();
  if (n < 1) throw std::invalid_argument("spanning tree of an empty graph");
  std::vector<std::vector<int>> adjacency(n);
  for (const Edge& e : graph.edges) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());

  SpanningTree tree{n, {}};
  std::vector<bool> seen(n, false);
  std::queue<int> frontier;
  seen[0] = true;
  frontier.push(0);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adjacency[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      tree.edges.push_back(Edge::Of(u, v));
      frontier.push(v);
    }
  }
  if (static_cast<int>(tree.edges.size()) != n - 1) {
    throw std::invalid_argument("proximity graph is disconnected");
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

}  // namespace csm
