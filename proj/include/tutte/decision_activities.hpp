// Copyright 2026 The Authors.
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

#ifndef TUTTE_DECISION_ACTIVITIES_HPP
#define TUTTE_DECISION_ACTIVITIES_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

// Explicit decision trees are materialized only up to this many edges.
inline constexpr int kExplicitDecisionTreeCap = 12;

// One step taken while walking a decision tree: the edge at the node and the
// branch followed (right after a contraction, left after a deletion).
struct Decision {
  int edge = 0;
  bool right = false;
};

/**
 * Perfect binary tree of depth m whose labels along every root-to-leaf path
 * form a permutation of the edges. Represented either explicitly (heap
 * order: children of node i are 2i+1 on the left and 2i+2 on the right) or
 * by a chooser mapping the path so far to the next label.
 */
class DecisionTree {
 public:
  using Chooser = std::function<int(std::span<const Decision>)>;

  DecisionTree(int edge_count, Chooser chooser);
  // labels has 2^m - 1 entries in heap order; every path is validated.
  static DecisionTree explicit_tree(int edge_count, std::vector<int> labels);
  // Every node at depth k is labelled order[k].
  static DecisionTree constant_order(std::vector<int> order);
  static DecisionTree constant_order(int edge_count);
  // Each node picks uniformly among the edges not yet on its path, with the
  // randomness derived from the seed and the path, so the tree is fixed.
  static DecisionTree seeded_random(int edge_count, std::uint64_t seed);

  int edge_count() const { return edge_count_; }
  // Label of the node reached by `path`; validated against the path.
  int next(std::span<const Decision> path) const;
  // Heap-ordered labels. Requires edge_count() <= kExplicitDecisionTreeCap.
  std::vector<int> materialize() const;

 private:
  int edge_count_ = 0;
  Chooser chooser_;
};

// Result of running the decision-tree recursion on a subset S.
struct GMPartition {
  EdgeSet internal;            // I(S): bridges when reached
  EdgeSet external;            // L(S): loops when reached
  EdgeSet subgraph_internal;   // S_I: in S, contracted
  EdgeSet subgraph_external;   // S_E: outside S, deleted
  bool operator==(const GMPartition&) const = default;
};

GMPartition gm_partition(const Graph& g, const DecisionTree& d, EdgeSet s);

// Sum over all S of x^|S∩I(S)| w^|S^c∩I(S)| y^|S^c∩L(S)| z^|S∩L(S)|, in (x, w, y, z).
MultiPoly gm_expansion(const Graph& g, const DecisionTree& d);

}  // namespace tutte

#endif  // TUTTE_DECISION_ACTIVITIES_HPP
