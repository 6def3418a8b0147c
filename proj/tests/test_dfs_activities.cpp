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

#include <algorithm>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tutte/corpus.hpp"
#include "tutte/dfs_activities.hpp"
#include "tutte/errors.hpp"
#include "tutte/tutte_core.hpp"

using namespace tutte;

namespace {

// Recursive DFS from the smallest label that always moves to the unvisited
// neighbour with the largest label. Returns the edges used.
void visit(const Graph& g, EdgeSet s, const std::vector<int>& label, int at, std::vector<int>& seen, EdgeSet& used) {
  seen[at] = 1;
  while (true) {
    int best = -1;
    int best_edge = -1;
    for (int e : s) {
      const Edge& edge = g.edge(e);
      int other = edge.u == at ? edge.v : edge.v == at ? edge.u : -1;
      if (other < 0 || seen[other]) continue;
      if (best < 0 || label[other] > label[best]) {
        best = other;
        best_edge = e;
      }
    }
    if (best < 0) return;
    used.insert(best_edge);
    visit(g, s, label, best, seen, used);
  }
}

EdgeSet oracle_dfs_tree(const Graph& g, EdgeSet s, const std::vector<int>& label) {
  std::vector<int> seen(g.vertex_count(), 0);
  EdgeSet used;
  const int root = static_cast<int>(std::min_element(label.begin(), label.end()) - label.begin());
  visit(g, s, label, root, seen, used);
  return used;
}

std::vector<Graph> simple_connected(int max_vertices, int max_edges) {
  CorpusOptions o;
  o.max_vertices = max_vertices;
  o.max_edges = max_edges;
  o.connected_only = true;
  o.simple = true;
  return multigraph_corpus(o);
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("canonical DFS forest of the triangle", "[dfs]") {
  const Graph k3 = k3_std();
  const VertexOrder order = VertexOrder::identity(3);
  const RootedForest f = dfs_canonical_forest(k3, k3.all_edges(), order);
  CHECK(f.edges == EdgeSet({1, 2}));
  CHECK(f.roots == std::vector<int>{0});
  CHECK(f.parent == std::vector<int>{-1, 2, 0});

  const RootedForest t = root_spanning_tree(k3, EdgeSet{1, 2}, order);
  CHECK(dfs_external_active(k3, t, 0, order));
  CHECK(dfs_external_activity(k3, t, order) == EdgeSet{0});
  CHECK(dfs_external_activity(k3, root_spanning_tree(k3, EdgeSet{0, 1}, order), order) == EdgeSet{});
  CHECK(dfs_expansion(k3, order) == MultiPoly::parse("x^2 + x + y", kXY));
}

TEST_CASE("vertex orders and induced edge ranks", "[dfs]") {
  CHECK_THROWS_AS(VertexOrder::from_labels({0, 0, 1}), InputError);
  const VertexOrder order = VertexOrder::from_labels({2, 0, 1});
  CHECK(order.smallest() == 1);
  const Graph k3 = k3_std();
  CHECK(induced_edge_ranks(k3, VertexOrder::identity(3), InducedEdgeOrder::kLexAscending) ==
        std::vector<int>{0, 2, 1});
  CHECK(induced_edge_ranks(k3, VertexOrder::identity(3), InducedEdgeOrder::kLexDescending) ==
        std::vector<int>{2, 0, 1});
}

TEST_CASE("DFS preconditions", "[dfs]") {
  const VertexOrder two = VertexOrder::identity(2);
  CHECK_THROWS_AS(dfs_expansion(parallel_edges(2), two), InputError);
  CHECK_THROWS_AS(dfs_expansion(Graph(2, {}), two), InputError);
  CHECK_THROWS_AS(dfs_expansion(k3_std(), two), InputError);
  CHECK_THROWS_AS(root_spanning_tree(k3_std(), EdgeSet{0}, VertexOrder::identity(3)), InputError);
}

TEST_CASE("canonical forest matches a recursive DFS", "[dfs][property]") {
  for (const Graph& g : simple_connected(4, 6)) {
    for (const auto& labels : permutations(g.vertex_count())) {
      const VertexOrder order = VertexOrder::from_labels(labels);
      for (EdgeSet s : oracle::subsets(g.edge_count())) {
        if (oracle::rank(g, s) != g.vertex_count() - 1) continue;
        REQUIRE(dfs_canonical_forest(g, s, order).edges == oracle_dfs_tree(g, s, labels));
      }
    }
  }
}

TEST_CASE("definitional external activity matches the DFS restart", "[dfs][property]") {
  for (const Graph& g : simple_connected(4, 6)) {
    for (const auto& labels : permutations(g.vertex_count())) {
      const VertexOrder order = VertexOrder::from_labels(labels);
      for (EdgeSet t : maximal_spanning_forests(g)) {
        const RootedForest rooted = root_spanning_tree(g, t, order);
        for (int e : t.complement(g.edge_count())) {
          const bool restart = oracle_dfs_tree(g, t.with(e), labels) == t;
          REQUIRE(dfs_external_active(g, rooted, e, order) == restart);
          REQUIRE(dfs_external_active_by_search(g, rooted, e, order) == restart);
        }
      }
    }
  }
}

TEST_CASE("DFS external activity gives the y-marginal", "[dfs][property]") {
  for (const Graph& g : simple_connected(4, 6)) {
    const MultiPoly at_x1 = specialize(oracle::tutte(g), "x", 1);
    for (const auto& labels : permutations(g.vertex_count())) {
      const VertexOrder order = VertexOrder::from_labels(labels);
      REQUIRE(specialize(dfs_expansion(g, order), "x", 1) == at_x1);
    }
  }
}

TEST_CASE("DFS expansion on cycles and complete graphs", "[dfs]") {
  for (const Graph& g : {cycle_graph(4), cycle_graph(5), complete_graph(4), path_graph(4), star_graph(3)}) {
    CHECK(dfs_expansion(g, VertexOrder::identity(g.vertex_count())) == tutte_whitney(g));
  }
}
