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

#ifndef TUTTE_GRAPH_HPP
#define TUTTE_GRAPH_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tutte/edge_set.hpp"

namespace tutte {

// Exhaustive (2^m) routines refuse graphs with more edges than this.
inline constexpr int kExhaustiveEdgeCap = 20;

struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

/**
 * Finite multigraph. Loops and parallel edges are allowed. The total order on
 * the edges is the list position and never changes once constructed.
 */
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }

  bool operator==(const Graph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Throws CapExceeded when g has more than kExhaustiveEdgeCap edges.
void require_exhaustive_cap(const Graph& g, const std::string& what);

// |V| minus the number of components of (V, a).
int rank(const Graph& g, EdgeSet a);
int rank(const Graph& g);

// Closure: a together with every edge whose addition keeps the rank.
EdgeSet closure(const Graph& g, EdgeSet a);

bool is_loop(const Graph& g, int e);
bool is_bridge(const Graph& g, int e);
bool is_forest(const Graph& g, EdgeSet a);
bool is_maximal_spanning_forest(const Graph& g, EdgeSet f);
bool is_connected(const Graph& g);
bool has_parallel_edges(const Graph& g);
bool has_loops(const Graph& g);

// Component id per vertex of (V, a), numbered by smallest member vertex.
std::vector<int> components(const Graph& g, EdgeSet a);

// Deletion and contraction. Surviving edges keep their relative order, so
// edge i of the minor is the i-th smallest element of surviving_edges().
Graph delete_edges(const Graph& g, EdgeSet a);
Graph contract_edges(const Graph& g, EdgeSet a);
// g restricted to a, i.e. g with the complement of a deleted.
Graph restrict_to(const Graph& g, EdgeSet a);

// Permutes the edge list: edge i of the result is edge order[i] of g.
Graph reorder_edges(const Graph& g, std::span<const int> order);

// Maps a subset of minor edges back to the parent's edge indices, given the
// parent edges that survived (ascending).
EdgeSet lift_edges(EdgeSet minor_set, EdgeSet surviving);
// Restricts a parent subset to the surviving edges, re-indexed for the minor.
EdgeSet project_edges(EdgeSet parent_set, EdgeSet surviving);

void for_each_maximal_spanning_forest(const Graph& g, const std::function<void(EdgeSet)>& visit);
std::vector<EdgeSet> maximal_spanning_forests(const Graph& g);

// Unique cocircuit inside (E - f) + e, for e in f.
EdgeSet fundamental_cut(const Graph& g, EdgeSet f, int e);
// Unique circuit inside f + e, for e not in f.
EdgeSet fundamental_cycle(const Graph& g, EdgeSet f, int e);

// Exhaustive enumeration of minimal cycles / minimal cuts. Capped.
std::vector<EdgeSet> circuits(const Graph& g);
std::vector<EdgeSet> cocircuits(const Graph& g);

// Whether some cocircuit (resp. circuit) C with C within x contains e and has
// e as its smallest element. Requires e in x.
bool min_in_some_cocircuit_within(const Graph& g, int e, EdgeSet x);
bool min_in_some_circuit_within(const Graph& g, int e, EdgeSet x);

}  // namespace tutte

#endif  // TUTTE_GRAPH_HPP
