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

#ifndef TUTTE_DFS_ACTIVITIES_HPP
#define TUTTE_DFS_ACTIVITIES_HPP

#include <span>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

// A total order on vertices: label[v] is the position of v, 0 = smallest.
class VertexOrder {
 public:
  static VertexOrder identity(int n);
  // labels must be a permutation of 0..n-1.
  static VertexOrder from_labels(std::vector<int> labels);

  int size() const { return static_cast<int>(label_.size()); }
  int label(int v) const { return label_[v]; }
  int smallest() const { return smallest_; }
  std::span<const int> labels() const { return label_; }

 private:
  std::vector<int> label_;
  int smallest_ = 0;
};

// A spanning forest with every tree edge oriented away from its root.
struct RootedForest {
  EdgeSet edges;
  std::vector<int> parent;       // -1 at roots
  std::vector<int> parent_edge;  // -1 at roots
  std::vector<int> depth;
  std::vector<int> roots;        // in discovery order
};

// How a vertex order induces the edge order used for internal activity.
enum class InducedEdgeOrder {
  kLexAscending,   // by (smaller label, larger label), ascending
  kLexDescending,  // the reverse of kLexAscending
  kHighFirstAscending,   // by (larger label, smaller label), ascending
  kHighFirstDescending,  // the reverse of kHighFirstAscending
};

// The convention under which the DFS expansion reproduces T(G; x, y).
inline constexpr InducedEdgeOrder kDfsInternalOrder = InducedEdgeOrder::kLexAscending;

// rank_of[e] for the induced edge order.
std::vector<int> induced_edge_ranks(const Graph& g, const VertexOrder& order, InducedEdgeOrder convention);

// Depth-first search of (V, s) from the smallest vertex, always stepping to
// the largest unvisited neighbour; restarts from the smallest unvisited vertex
// when s does not span. Loops in s are ignored. Requires g connected and free
// of parallel edges.
RootedForest dfs_canonical_forest(const Graph& g, EdgeSet s, const VertexOrder& order);

// Orients a spanning tree away from the smallest vertex.
RootedForest root_spanning_tree(const Graph& g, EdgeSet tree, const VertexOrder& order);

// Definitional form: e is a loop, or e joins u to a descendant v and the tree
// edge (u, w) leaving u along the fundamental cycle has w > v.
bool dfs_external_active(const Graph& g, const RootedForest& tree, int e, const VertexOrder& order);

// Search form: the DFS of tree + e reproduces the tree.
bool dfs_external_active_by_search(const Graph& g, const RootedForest& tree, int e, const VertexOrder& order);

EdgeSet dfs_external_activity(const Graph& g, const RootedForest& tree, const VertexOrder& order);

// Sum over spanning trees of x^|I(T)| y^|E_DFS(T)|, with I(T) taken under the
// edge order induced by `convention`.
MultiPoly dfs_expansion(const Graph& g, const VertexOrder& order,
                        InducedEdgeOrder convention = kDfsInternalOrder);

}  // namespace tutte

#endif  // TUTTE_DFS_ACTIVITIES_HPP
