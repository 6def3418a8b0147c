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

#ifndef TUTTE_SUBGRAPH_ACTIVITIES_HPP
#define TUTTE_SUBGRAPH_ACTIVITIES_HPP

#include <vector>

#include "tutte/graph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

// Gordon-Traldi four-way activity classification for an arbitrary subgraph S.
struct GTPartition {
  EdgeSet internal_present;  // e in S, minimum of a cocircuit within S^c + e
  EdgeSet internal_absent;   // e not in S, minimum of a cocircuit within S^c
  EdgeSet external_present;  // e in S, minimum of a circuit within S
  EdgeSet external_absent;   // e not in S, minimum of a circuit within S + e
  bool operator==(const GTPartition&) const = default;
};

// Crapo interval [F - I(F), F + E(F)] of a maximal spanning forest F.
struct CrapoInterval {
  EdgeSet lower;   // forest minus its internally active edges
  EdgeSet upper;   // forest plus its externally active edges
  EdgeSet forest;
  bool contains(EdgeSet s) const { return lower.is_subset_of(s) && s.is_subset_of(upper); }
  long long size() const { return 1LL << (upper - lower).size(); }
};

GTPartition gt_partition(const Graph& g, EdgeSet s);

// Sum over all S of x^|I∩S| w^|I∩S^c| y^|L∩S| z^|L∩S^c|, in (x, w, y, z).
MultiPoly gt_expansion(const Graph& g);

// One interval per maximal spanning forest, in forest enumeration order.
std::vector<CrapoInterval> crapo_intervals(const Graph& g);

// True iff the intervals are pairwise disjoint and cover every subset of E.
bool crapo_verify(const Graph& g);

}  // namespace tutte

#endif  // TUTTE_SUBGRAPH_ACTIVITIES_HPP
