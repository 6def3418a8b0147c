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
#include "tutte/forest_activities.hpp"
#include "tutte/tutte_core.hpp"

using namespace tutte;

TEST_CASE("forest activities on the triangle", "[forest]") {
  const Graph k3 = k3_std();
  CHECK(forest_activities(k3, EdgeSet{0, 1}) == ForestActivitySets{EdgeSet{0, 1}, EdgeSet{}});
  CHECK(forest_activities(k3, EdgeSet{0, 2}) == ForestActivitySets{EdgeSet{0}, EdgeSet{}});
  CHECK(forest_activities(k3, EdgeSet{1, 2}) == ForestActivitySets{EdgeSet{}, EdgeSet{0}});
  CHECK(tutte_forest_expansion(k3) == MultiPoly::parse("x^2 + x + y", kXY));
}

TEST_CASE("loops are externally active and bridges internally active", "[forest]") {
  const Graph g(2, {{0, 0}, {0, 1}, {1, 1}});
  const ForestActivitySets a = forest_activities(g, EdgeSet{1});
  CHECK(a.internal == EdgeSet{1});
  CHECK(a.external == EdgeSet({0, 2}));
}

TEST_CASE("activities match the circuit and cocircuit definitions", "[forest][property]") {
  CorpusOptions o;
  o.max_vertices = 4;
  o.max_edges = 6;
  for (const Graph& g : multigraph_corpus(o)) {
    const auto circuits = oracle::circuits(g);
    const auto cocircuits = oracle::cocircuits(g);
    for (EdgeSet f : maximal_spanning_forests(g)) {
      const ForestActivitySets a = forest_activities(g, f);
      for (int e = 0; e < g.edge_count(); ++e) {
        if (f.contains(e)) {
          // The fundamental cut is the only cocircuit inside (E - F) + e that contains e.
          REQUIRE(a.internal.contains(e) == oracle::min_in_some(cocircuits, e, f.complement(g.edge_count()).with(e)));
        } else {
          REQUIRE(a.external.contains(e) == oracle::min_in_some(circuits, e, f.with(e)));
        }
      }
    }
  }
}

TEST_CASE("forest expansion equals the rank expansion", "[forest][property]") {
  CorpusOptions o;
  o.max_vertices = 4;
  o.max_edges = 6;
  for (const Graph& g : multigraph_corpus(o)) REQUIRE(tutte_forest_expansion(g) == oracle::tutte(g));
}

TEST_CASE("forest expansion does not depend on the edge order", "[forest][property]") {
  std::vector<int> order(6);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(check_order_independence(complete_graph(4), all));
  CHECK(check_order_independence(Graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}, {0, 2}, {1, 2}}), all));

  const Graph k3 = k3_std();
  const std::vector<int> reversed = {2, 1, 0};
  const std::vector<int> ranks = {2, 1, 0};
  // Under the reversed order the largest index is the minimum.
  CHECK(forest_activities(k3, EdgeSet{1, 2}, ranks).internal == EdgeSet({1, 2}));
  CHECK(check_order_independence(k3, {reversed}));
}
