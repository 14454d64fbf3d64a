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

// Exhaustive references for small instances, independent of the production
// algorithms, plus the quick self-check suite behind `csm check`.

#ifndef CSM_ORACLES_H_
#define CSM_ORACLES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "csm/netgraph.h"

namespace csm {

// All n^(n-2) labeled spanning trees of K_n, decoded from Pruefer sequences.
// n = 1 gives one empty tree, n = 2 the single edge. Throws for n > 8.
std::vector<SpanningTree> EnumerateSpanningTrees(int n);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Randomized oracle and property checks on small instances: greedy versus
// exhaustive optimum, MST versus spanning-tree enumeration, coverage
// submodularity, deviation solver versus grid oracle.
std::vector<CheckOutcome> RunSelfChecks(std::uint64_t seed, int trials);

}  // namespace csm

#endif  // CSM_ORACLES_H_
