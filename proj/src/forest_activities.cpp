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

#include "tutte/forest_activities.hpp"

#include <numeric>

#include "tutte/errors.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

namespace {

int min_by_rank(EdgeSet s, std::span<const int> rank_of) {
  int best = -1;
  for (int e : s) {
    if (best < 0 || rank_of[e] < rank_of[best]) best = e;
  }
  return best;
}

}  // namespace

ForestActivitySets forest_activities(const Graph& g, EdgeSet forest, std::span<const int> rank_of) {
  if (!is_maximal_spanning_forest(g, forest)) {
    throw InputError("forest_activities: " + forest.to_string() + " is not a maximal spanning forest");
  }
  if (static_cast<int>(rank_of.size()) != g.edge_count()) throw InputError("forest_activities: bad edge ranking");
  ForestActivitySets out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (forest.contains(e)) {
      if (min_by_rank(fundamental_cut(g, forest, e), rank_of) == e) out.internal.insert(e);
    } else {
      if (min_by_rank(fundamental_cycle(g, forest, e), rank_of) == e) out.external.insert(e);
    }
  }
  return out;
}

ForestActivitySets forest_activities(const Graph& g, EdgeSet forest) {
  std::vector<int> identity(g.edge_count());
  std::iota(identity.begin(), identity.end(), 0);
  return forest_activities(g, forest, identity);
}

MultiPoly tutte_forest_expansion(const Graph& g) {
  MultiPoly out(kXY);
  for_each_maximal_spanning_forest(g, [&](EdgeSet f) {
    ForestActivitySets act = forest_activities(g, f);
    out.add_term({static_cast<unsigned>(act.internal.size()), static_cast<unsigned>(act.external.size())}, 1);
  });
  return out;
}

bool check_order_independence(const Graph& g, const std::vector<std::vector<int>>& orders) {
  const MultiPoly reference = tutte_forest_expansion(g);
  for (const auto& order : orders) {
    if (tutte_forest_expansion(reorder_edges(g, order)) != reference) return false;
  }
  return true;
}

}  // namespace tutte
