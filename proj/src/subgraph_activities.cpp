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

#include "tutte/subgraph_activities.hpp"

#include "tutte/forest_activities.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

GTPartition gt_partition(const Graph& g, EdgeSet s) {
  const int m = g.edge_count();
  const EdgeSet absent = s.complement(m);
  GTPartition out;
  for (int e = 0; e < m; ++e) {
    if (s.contains(e)) {
      if (min_in_some_cocircuit_within(g, e, absent.with(e))) out.internal_present.insert(e);
      if (min_in_some_circuit_within(g, e, s)) out.external_present.insert(e);
    } else {
      if (min_in_some_cocircuit_within(g, e, absent)) out.internal_absent.insert(e);
      if (min_in_some_circuit_within(g, e, s.with(e))) out.external_absent.insert(e);
    }
  }
  return out;
}

MultiPoly gt_expansion(const Graph& g) {
  require_exhaustive_cap(g, "gt_expansion");
  MultiPoly out(kXWYZ);
  const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    GTPartition p = gt_partition(g, EdgeSet(bits));
    out.add_term({static_cast<unsigned>(p.internal_present.size()), static_cast<unsigned>(p.internal_absent.size()),
                  static_cast<unsigned>(p.external_present.size()), static_cast<unsigned>(p.external_absent.size())},
                 1);
  }
  return out;
}

std::vector<CrapoInterval> crapo_intervals(const Graph& g) {
  std::vector<CrapoInterval> out;
  for_each_maximal_spanning_forest(g, [&](EdgeSet f) {
    ForestActivitySets act = forest_activities(g, f);
    out.push_back({f - act.internal, f | act.external, f});
  });
  return out;
}

bool crapo_verify(const Graph& g) {
  require_exhaustive_cap(g, "crapo_verify");
  std::vector<unsigned char> hits(std::size_t{1} << g.edge_count(), 0);
  for (const CrapoInterval& interval : crapo_intervals(g)) {
    // Walk every subset of the free part upper - lower.
    const std::uint64_t free = (interval.upper - interval.lower).bits();
    std::uint64_t part = 0;
    do {
      unsigned char& hit = hits[interval.lower.bits() | part];
      if (hit != 0) return false;
      hit = 1;
      part = (part - free) & free;
    } while (part != 0);
  }
  for (unsigned char hit : hits) {
    if (hit == 0) return false;
  }
  return true;
}

}  // namespace tutte
