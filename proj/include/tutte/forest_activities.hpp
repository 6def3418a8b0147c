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

#ifndef TUTTE_FOREST_ACTIVITIES_HPP
#define TUTTE_FOREST_ACTIVITIES_HPP

#include <span>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

struct ForestActivitySets {
  EdgeSet internal;  // within the forest
  EdgeSet external;  // outside the forest
  bool operator==(const ForestActivitySets&) const = default;
};

// Internal: forest edges that are the minimum of their fundamental cut.
// External: non-forest edges that are the minimum of their fundamental cycle.
ForestActivitySets forest_activities(const Graph& g, EdgeSet forest);

// Same, with "minimum" taken under an arbitrary edge ranking
// (rank_of[e] = position of e). Used for orders other than the index order.
ForestActivitySets forest_activities(const Graph& g, EdgeSet forest, std::span<const int> rank_of);

// Sum over maximal spanning forests of x^|internal| y^|external|.
MultiPoly tutte_forest_expansion(const Graph& g);

// Recomputes the expansion with the edge list permuted by each order
// (order[i] = original edge placed at position i) and compares.
bool check_order_independence(const Graph& g, const std::vector<std::vector<int>>& orders);

}  // namespace tutte

#endif  // TUTTE_FOREST_ACTIVITIES_HPP
