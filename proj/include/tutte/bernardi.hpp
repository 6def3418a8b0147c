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

#ifndef TUTTE_BERNARDI_HPP
#define TUTTE_BERNARDI_HPP

#include <random>
#include <string_view>
#include <vector>

#include "tutte/forest_activities.hpp"
#include "tutte/graph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

// Half-edges are numbered 2 * edge + slot, where slot 0 sits at edge.u and
// slot 1 at edge.v.
inline int half_edge(int edge, int slot) { return 2 * edge + slot; }
inline int edge_of(int h) { return h / 2; }
inline int opposite(int h) { return h ^ 1; }
int vertex_of(const Graph& g, int h);

/**
 * Rooted combinatorial map (G, sigma, root) on a connected loopless graph.
 * sigma sends each half-edge to the next half-edge around the same vertex and
 * the half-edges at every vertex form a single cycle of sigma.
 */
class CombinatorialMap {
 public:
  CombinatorialMap(Graph g, std::vector<int> sigma, int root);

  // rotation[v] lists the half-edges at v in cyclic order.
  static CombinatorialMap from_rotation(Graph g, const std::vector<std::vector<int>>& rotation, int root);
  // Rotation at each vertex follows the edge list; the root is half-edge 0.
  static CombinatorialMap standard(Graph g);
  // Uniformly shuffled rotation at every vertex and a uniformly chosen root.
  static CombinatorialMap random(Graph g, std::mt19937_64& rng);

  const Graph& graph() const { return graph_; }
  int sigma(int h) const { return sigma_[h]; }
  int root() const { return root_; }
  std::vector<std::vector<int>> rotation() const;

 private:
  Graph graph_;
  std::vector<int> sigma_;
  int root_ = -1;
};

// Edges in the order of first visit by the motion operator
// t(h) = sigma(h) for h outside the tree, sigma(alpha(h)) for h in the tree.
std::vector<int> motion_tour(const CombinatorialMap& map, EdgeSet tree);

ForestActivitySets bernardi_activities(const CombinatorialMap& map, EdgeSet tree);

// Sum over spanning trees of x^|I_B(T)| y^|E_B(T)|.
MultiPoly bernardi_expansion(const CombinatorialMap& map);

// One line per vertex (in vertex order) listing "(edge, slot)" tokens in
// cyclic order, an optional "v:" prefix, and a line "root <edge> <vertex>".
// '#' starts a comment.
CombinatorialMap parse_rotation(const Graph& g, std::string_view text);
std::string format_rotation(const CombinatorialMap& map);

}  // namespace tutte

#endif  // TUTTE_BERNARDI_HPP
