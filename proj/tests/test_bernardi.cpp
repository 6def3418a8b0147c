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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tutte/bernardi.hpp"
#include "tutte/corpus.hpp"
#include "tutte/errors.hpp"
#include "tutte/tutte_core.hpp"

using namespace tutte;

namespace {

// Edges in order of first visit, following the motion operator for 2m steps.
std::vector<int> oracle_tour(const CombinatorialMap& map, EdgeSet tree) {
  const int m = map.graph().edge_count();
  std::vector<int> order;
  std::vector<int> seen(m, 0);
  int h = map.root();
  for (int step = 0; step < 2 * m; ++step) {
    if (!seen[h / 2]) {
      seen[h / 2] = 1;
      order.push_back(h / 2);
    }
    h = tree.contains(h / 2) ? map.sigma(h ^ 1) : map.sigma(h);
  }
  REQUIRE(h == map.root());
  return order;
}

std::vector<Graph> loopless_connected(int max_vertices, int max_edges) {
  CorpusOptions o;
  o.max_vertices = max_vertices;
  o.max_edges = max_edges;
  o.connected_only = true;
  o.loopless = true;
  return multigraph_corpus(o);
}

}  // namespace

TEST_CASE("standard map of the triangle", "[bernardi]") {
  const CombinatorialMap map = CombinatorialMap::standard(k3_std());
  CHECK(map.root() == 0);
  CHECK(map.rotation() == std::vector<std::vector<int>>{{0, 4}, {1, 2}, {3, 5}});
  CHECK(format_rotation(map) == "0: (0,0) (2,0)\n1: (0,1) (1,0)\n2: (1,1) (2,1)\nroot 0 0\n");
  CHECK(motion_tour(map, EdgeSet{0, 1}) == std::vector<int>{0, 1, 2});
  CHECK(bernardi_activities(map, EdgeSet{0, 1}) == ForestActivitySets{EdgeSet{0, 1}, EdgeSet{}});
  CHECK(bernardi_expansion(map) == MultiPoly::parse("x^2 + x + y", kXY));
}

TEST_CASE("half-edge helpers", "[bernardi]") {
  const Graph k3 = k3_std();
  CHECK(half_edge(2, 1) == 5);
  CHECK(edge_of(5) == 2);
  CHECK(opposite(4) == 5);
  CHECK(vertex_of(k3, 4) == 0);
  CHECK(vertex_of(k3, 5) == 2);
}

TEST_CASE("map validation", "[bernardi]") {
  const Graph k3 = k3_std();
  CHECK_THROWS_AS(CombinatorialMap::standard(single_loop()), InputError);
  CHECK_THROWS_AS(CombinatorialMap::standard(Graph(3, {{0, 1}})), InputError);
  CHECK_THROWS_AS(CombinatorialMap(k3, {0, 1, 2, 3, 4, 5}, 0), InputError);
  CHECK_THROWS_AS(CombinatorialMap(k3, {4, 2, 1, 5, 0, 3}, 6), InputError);
  CHECK_THROWS_AS(CombinatorialMap(k3, {1, 0, 2, 3, 4, 5}, 0), InputError);
  CHECK_NOTHROW(CombinatorialMap(k3, {4, 2, 1, 5, 0, 3}, 3));
}

TEST_CASE("rotation files", "[bernardi]") {
  const Graph k3 = k3_std();
  const CombinatorialMap map = parse_rotation(k3, "# K3\n0: (2,0) (0,0)\n1: (1,0) (0,1)\n2: (2,1) (1,1)\nroot 1 2\n");
  CHECK(map.root() == half_edge(1, 1));
  CHECK(map.sigma(half_edge(2, 0)) == half_edge(0, 0));
  CHECK(parse_rotation(k3, format_rotation(map)).rotation() == map.rotation());

  auto line_of = [&](const std::string& text) {
    try {
      parse_rotation(k3, text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("0: (0,0) (2,0)\n1: (0,1) (1,0)\n2: (1,1) (2,1)\nroot 0 2\n") == 4);
  CHECK(line_of("0: (0,0) (2,x)\n") == 1);
  CHECK(line_of("1: (0,0)\n") == 1);
  CHECK_THROWS_AS(parse_rotation(k3, "0: (0,0) (2,0)\n1: (0,1) (1,0)\n2: (2,1) (2,1)\nroot 0 0\n"), InputError);
}

TEST_CASE("motion tour matches a direct simulation", "[bernardi][property]") {
  std::mt19937_64 rng(11);
  for (const Graph& g : loopless_connected(4, 6)) {
    std::vector<CombinatorialMap> maps = {CombinatorialMap::standard(g)};
    for (int i = 0; i < 2; ++i) maps.push_back(CombinatorialMap::random(g, rng));
    for (const CombinatorialMap& map : maps) {
      for (EdgeSet t : maximal_spanning_forests(g)) {
        const std::vector<int> tour = motion_tour(map, t);
        REQUIRE(tour == oracle_tour(map, t));
        REQUIRE(static_cast<int>(tour.size()) == g.edge_count());
      }
    }
  }
}

TEST_CASE("embedding activities reproduce the Tutte polynomial", "[bernardi][property]") {
  std::mt19937_64 rng(5);
  for (const Graph& g : loopless_connected(4, 6)) {
    const MultiPoly t = oracle::tutte(g);
    REQUIRE(bernardi_expansion(CombinatorialMap::standard(g)) == t);
    for (int i = 0; i < 3; ++i) REQUIRE(bernardi_expansion(CombinatorialMap::random(g, rng)) == t);
  }
}
