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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tutte/corpus.hpp"
#include "tutte/errors.hpp"
#include "tutte/tutte_core.hpp"

using namespace tutte;

namespace {

MultiPoly xy(std::string_view text) { return MultiPoly::parse(text, kXY); }

}  // namespace

TEST_CASE("small Tutte polynomials", "[tutte_core]") {
  CHECK(tutte_whitney(k3_std()) == xy("x^2 + x + y"));
  CHECK(tutte_whitney(single_loop()) == xy("y"));
  CHECK(tutte_whitney(single_bridge()) == xy("x"));
  CHECK(tutte_whitney(parallel_edges(3)) == xy("y^2 + y + x"));
  CHECK(tutte_whitney(Graph(3, {})) == xy("1"));
  CHECK(tutte_whitney(cycle_graph(4)) == xy("x^3 + x^2 + x + y"));
  CHECK(tutte_whitney(complete_graph(4)) ==
        xy("x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y"));
}

TEST_CASE("deletion-contraction equals the rank expansion", "[tutte_core][property]") {
  CorpusOptions o;
  o.max_vertices = 4;
  o.max_edges = 6;
  for (const Graph& g : multigraph_corpus(o)) {
    const MultiPoly t = oracle::tutte(g);
    REQUIRE(tutte_whitney(g) == t);
    REQUIRE(tutte_delcon(g) == t);
  }
}

TEST_CASE("evaluations count trees, forests and colourings", "[tutte_core][property]") {
  CorpusOptions o;
  o.max_vertices = 4;
  o.max_edges = 5;
  o.connected_only = true;
  for (const Graph& g : multigraph_corpus(o)) {
    const MultiPoly t = tutte_delcon(g);
    REQUIRE(t.evaluate({{"x", 1}, {"y", 1}}) == oracle::spanning_tree_count(g));
    int independent = 0;
    for (EdgeSet s : oracle::subsets(g.edge_count())) independent += oracle::independent(g, s);
    REQUIRE(t.evaluate({{"x", 2}, {"y", 1}}) == independent);
    REQUIRE(t.evaluate({{"x", 2}, {"y", 2}}) == Rational(1LL << g.edge_count()));
    // Chromatic polynomial: P(k) = (-1)^(n-1) k T(1-k, 0) for connected graphs.
    for (int k = 1; k <= 3; ++k) {
      Rational p = Rational(k) * t.evaluate({{"x", 1 - k}, {"y", 0}});
      if ((g.vertex_count() - 1) % 2) p = -p;
      REQUIRE(p == Rational(oracle::proper_colourings(g, k)));
    }
  }
}

TEST_CASE("spanning trees of K4", "[tutte_core]") {
  CHECK(tutte_whitney(complete_graph(4)).evaluate({{"x", 1}, {"y", 1}}) == 16);
  CHECK(oracle::spanning_tree_count(complete_graph(4)) == 16);
}

TEST_CASE("four-variable shift and specialization", "[tutte_core]") {
  const MultiPoly t = tutte_whitney(k3_std());
  const MultiPoly four = shift_to_four_variables(t);
  CHECK(four.variables() == kXWYZ);
  CHECK(four.evaluate({{"x", 1}, {"w", 1}, {"y", 1}, {"z", 0}}) == t.evaluate({{"x", 2}, {"y", 1}}));
  CHECK(specialize(t, "y", 0) == xy("x^2 + x"));
}

TEST_CASE("canonical keys identify isomorphic graphs", "[tutte_core]") {
  const Graph a(3, {{0, 1}, {1, 2}});
  const Graph b(3, {{2, 0}, {1, 2}});
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_key(a) != canonical_key(k3_std()));
}

TEST_CASE("deletion-contraction rejects graphs past the cap", "[tutte_core]") {
  CHECK_THROWS_AS(tutte_whitney(Graph(2, std::vector<Edge>(21, Edge{0, 1}))), CapExceeded);
}
