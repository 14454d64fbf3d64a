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

// Communication graphs: proximity graphs over robot positions, connectivity,
// the deviation-cost complete graph over greedy endpoints and its minimum
// spanning tree.

#ifndef CSM_NETGRAPH_H_
#define CSM_NETGRAPH_H_

#include <compare>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "csm/geometry.h"

namespace csm {

// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge Of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int Find(int x);
  // Returns false if a and b were already joined.
  bool Union(int a, int b);
  int num_sets() const { return num_sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int num_sets_;
};

// (i, j) is an edge iff ||x_i - x_j|| <= comm_radius.
struct ProximityGraph {
  Points positions;
  double comm_radius = 0.0;
  std::vector<Edge> edges;  // sorted lexicographically

  int size() const { return static_cast<int>(positions.size()); }
};

ProximityGraph BuildProximityGraph(const Points& positions, double comm_radius);

bool IsConnected(int num_vertices, std::span<const Edge> edges);
inline bool IsConnected(const ProximityGraph& g) {
  return IsConnected(g.size(), g.edges);
}

// Least motion, shared equally, that brings two robots into range:
// max(0.5 * (||a - b|| - comm_radius), 0).
double EdgeWeight(const Point& a, const Point& b, double comm_radius);

// K_N with a symmetric, non-negative weight matrix and zero diagonal.
class WeightedCompleteGraph {
 public:
  // Throws std::invalid_argument if the matrix is not square, symmetric,
  // non-negative with zero diagonal.
  explicit WeightedCompleteGraph(Eigen::MatrixXd weights);

  // Edge weights from EdgeWeight over greedy endpoints.
  static WeightedCompleteGraph FromEndpoints(const Points& endpoints,
                                             double comm_radius);

  int size() const { return static_cast<int>(weights_.rows()); }
  double weight(int i, int j) const { return weights_(i, j); }
  double weight(const Edge& e) const { return weights_(e.u, e.v); }
  const Eigen::MatrixXd& matrix() const { return weights_; }

 private:
  Eigen::MatrixXd weights_;
};

struct SpanningTree {
  int num_vertices = 0;
  std::vector<Edge> edges;
};

// True iff the edges form a spanning tree over num_vertices vertices.
bool IsSpanningTree(const SpanningTree& tree);

// Kruskal over edges ordered by (weight, u, v). Deterministic under ties; a
// single vertex yields the empty tree. Throws on an empty graph.
SpanningTree MinimumSpanningTree(const WeightedCompleteGraph& graph);

double TotalWeight(const SpanningTree& tree, const WeightedCompleteGraph& graph);

// Heaviest edge of the tree; 0 for the empty tree.
double Bottleneck(const SpanningTree& tree, const WeightedCompleteGraph& graph);

// Breadth-first spanning tree of a connected proximity graph, rooted at 0 and
// visiting neighbours in index order. Throws std::invalid_argument if the
// graph is disconnected.
SpanningTree SpanningTreeOf(const ProximityGraph& graph);

}  // namespace csm

#endif  // CSM_NETGRAPH_H_
