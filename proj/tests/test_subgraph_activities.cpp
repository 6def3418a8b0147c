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
#include "tutte/subgraph_activities.hpp"
#include "tutte/tutte_core.hpp"
#include "tutte/verify.hpp"

using namespace tutte;

TEST_CASE("subgraph activities on the triangle", "[subgraph]") {
  const Graph k3 = k3_std();
  CHECK(gt_partition(k3, EdgeSet{}).internal_absent == EdgeSet({0, 1}));
  CHECK(gt_partition(k3, k3.all_edges()).external_present == EdgeSet{0});
  CHECK(gt_partition(k3, EdgeSet{0, 1}).internal_present == EdgeSet({0, 1}));
  CHECK(gt_partition(k3, EdgeSet{0, 1}) == GTPartition{EdgeSet{0, 1}, EdgeSet{}, EdgeSet{}, EdgeSet{}});
  CHECK(gt_partition(k3, k3.all_edges()) == GTPartition{EdgeSet{}, EdgeSet{}, EdgeSet{0}, EdgeSet{}});
}

TEST_CASE("subgraph partition matches the circuit and cocircuit scans", "[subgraph][property]") {
  CorpusOptions o;
  o.max_vertices = 4;
  o.max_edges = 5;
  for (const Graph& g : multigraph_corpus(o)) {
    const int m = g.edge_count();
    const auto circuits = oracle::circuits(g);
    const auto cocircuits = oracle::cocircuits(g);
    for (EdgeSet s : oracle::subsets(m)) {
      const GTPartition p = gt_partition(g, s);
      const EdgeSet rest = s.complement(m);
      for (int e = 0; e < m; ++e) {
        if (s.contains(e)) {
          REQUIRE(p.internal_present.contains(e) == oracle::min_in_some(cocircuits, e, rest.with(e)));
          REQUIRE(p.external_present.contains(e) == oracle::min_in_some(circuits, e, s));
          REQUIRE_FALSE((p.internal_absent | p.external_absent).contains(e));
        } else {
          REQUIRE(p.internal_absent.contains(e) == oracle::min_in_some(cocircuits, e, rest));
          REQUIRE(p.external_absent.contains(e) == oracle::min_in_some(circuits, e, s.with(e)));
          REQUIRE_FALSE((p.internal_present | p.external_present).contains(e));
        }
      }
    }
  }
}

TEST_CASE("four-variable expansion equals the shifted polynomial", "[subgraph][property]") {
  CorpusOptions o;
  o.max_vertices = 4;
  o.max_edges = 6;
  for (const Graph& g : multigraph_corpus(o)) {
    const MultiPoly t = oracle::tutte(g);
    const MultiPoly gt = gt_expansion(g);
    REQUIRE(gt == shift_to_four_variables(t));
    REQUIRE(gt_specializations_hold(gt, t));
  }
}

TEST_CASE("Crapo intervals on the triangle", "[crapo]") {
  const auto intervals = crapo_intervals(k3_std());
  REQUIRE(intervals.size() == 3);
  long long total = 0;
  for (const CrapoInterval& i : intervals) {
    total += i.size();
    if (i.forest == EdgeSet{0, 1}) {
      CHECK(i.lower == EdgeSet{});
      CHECK(i.upper == EdgeSet({0, 1}));
    } else if (i.forest == EdgeSet{0, 2}) {
      CHECK(i.lower == EdgeSet{2});
      CHECK(i.upper == EdgeSet({0, 2}));
    } else {
      CHECK(i.forest == EdgeSet({1, 2}));
      CHECK(i.lower == EdgeSet({1, 2}));
      CHECK(i.upper == EdgeSet({0, 1, 2}));
    }
  }
  CHECK(total == 8);
  CHECK(crapo_verify(k3_std()));
}

TEST_CASE("Crapo intervals partition every subset exactly once", "[crapo][property]") {
  CorpusOptions o;
  o.max_vertices = 4;
  o.max_edges = 6;
  for (const Graph& g : multigraph_corpus(o)) {
    const auto intervals = crapo_intervals(g);
    for (EdgeSet s : oracle::subsets(g.edge_count())) {
      int hits = 0;
      for (const CrapoInterval& i : intervals) hits += i.contains(s);
      REQUIRE(hits == 1);
    }
    REQUIRE(crapo_verify(g));
  }
}
