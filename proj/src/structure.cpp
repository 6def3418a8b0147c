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

#include "tutte/structure.hpp"

#include <map>

#include "tutte/errors.hpp"
#include "tutte/forest_activities.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

bool is_flat(const Graph& g, EdgeSet a) { return closure(g, a) == a; }

bool is_union_of_circuits(const Graph& g, EdgeSet a) {
  const int r = rank(g, a);
  for (int e : a) {
    if (rank(g, a.without(e)) < r) return false;
  }
  return true;
}

std::vector<EdgeSet> flats(const Graph& g) {
  require_exhaustive_cap(g, "flats");
  std::vector<EdgeSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
    if (is_flat(g, EdgeSet(bits))) out.push_back(EdgeSet(bits));
  }
  return out;
}

std::vector<EdgeSet> cyclic_flats(const Graph& g) {
  std::vector<EdgeSet> out;
  for (EdgeSet f : flats(g)) {
    if (is_union_of_circuits(g, f)) out.push_back(f);
  }
  return out;
}

bool is_activity_bipartition(const Graph& g, EdgeSet forest, EdgeSet c) {
  const Graph inside = restrict_to(g, c);
  const EdgeSet inside_forest = project_edges(forest & c, c);
  if (!is_maximal_spanning_forest(inside, inside_forest)) return false;
  if (!forest_activities(inside, inside_forest).internal.empty()) return false;

  const EdgeSet rest = c.complement(g.edge_count());
  const Graph outside = contract_edges(g, c);
  const EdgeSet outside_forest = project_edges(forest - c, rest);
  if (!is_maximal_spanning_forest(outside, outside_forest)) return false;
  return forest_activities(outside, outside_forest).external.empty();
}

std::vector<EdgeSet> activity_bipartition_candidates(const Graph& g, EdgeSet forest) {
  if (!is_maximal_spanning_forest(g, forest)) {
    throw InputError("activity_bipartition: " + forest.to_string() + " is not a maximal spanning forest");
  }
  std::vector<EdgeSet> out;
  for (EdgeSet c : cyclic_flats(g)) {
    if (is_activity_bipartition(g, forest, c)) out.push_back(c);
  }
  return out;
}

EdgeSet activity_bipartition(const Graph& g, EdgeSet forest) {
  std::vector<EdgeSet> found = activity_bipartition_candidates(g, forest);
  if (found.size() != 1) {
    throw TheoremViolation("forest " + forest.to_string() + " splits along " + std::to_string(found.size()) +
                           " cyclic flats, expected exactly one");
  }
  return found.front();
}

MultiPoly convolution_sum(const Graph& g) {
  MultiPoly out(kXY);
  for (EdgeSet c : cyclic_flats(g)) {
    out += specialize(tutte_whitney(contract_edges(g, c)), "y", 0) *
           specialize(tutte_whitney(restrict_to(g, c)), "x", 0);
  }
  return out;
}

bool convolution_check(const Graph& g) { return convolution_sum(g) == tutte_whitney(g); }

bool BasisPoset::is_partial_order() const {
  for (int i = 0; i < size(); ++i) {
    if (less[i][i]) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> BasisPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (!less[a][b]) continue;
      bool between = false;
      for (int c = 0; c < size() && !between; ++c) between = less[a][c] && less[c][b];
      if (!between) out.push_back({a, b});
    }
  }
  return out;
}

std::string BasisPoset::label(int i) const {
  if (i < static_cast<int>(bases.size())) return bases[i].to_string();
  return adjoined_bottom ? "0" : "1";
}

BasisPoset make_poset(std::vector<EdgeSet> bases, std::vector<std::pair<int, int>> relations, bool adjoin_bottom,
                      bool adjoin_top) {
  if (adjoin_bottom && adjoin_top) throw InputError("adjoin a bottom or a top, not both");
  BasisPoset p;
  p.bases = std::move(bases);
  p.adjoined_bottom = adjoin_bottom;
  p.adjoined_top = adjoin_top;
  const int n = static_cast<int>(p.bases.size());
  const int extra = (adjoin_bottom || adjoin_top) ? 1 : 0;
  for (int i = 0; i < n && extra; ++i) {
    relations.push_back(adjoin_bottom ? std::pair{n, i} : std::pair{i, n});
  }
  p.relations = std::move(relations);
  p.less.assign(n + extra, std::vector<bool>(n + extra, false));
  for (auto [a, b] : p.relations) p.less[a][b] = true;
  for (int k = 0; k < p.size(); ++k) {
    for (int i = 0; i < p.size(); ++i) {
      if (!p.less[i][k]) continue;
      for (int j = 0; j < p.size(); ++j) {
        if (p.less[k][j]) p.less[i][j] = true;
      }
    }
  }
  return p;
}

namespace {

std::map<EdgeSet, int> index_of(const std::vector<EdgeSet>& bases) {
  std::map<EdgeSet, int> out;
  for (int i = 0; i < static_cast<int>(bases.size()); ++i) out[bases[i]] = i;
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> external_pivots(const Graph& g, const std::vector<EdgeSet>& bases) {
  const auto index = index_of(bases);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(bases.size()); ++i) {
    const EdgeSet b1 = bases[i];
    for (int f : b1.complement(g.edge_count())) {
      const int e = fundamental_cycle(g, b1, f).min();
      if (e == f) continue;
      out.push_back({i, index.at(b1.without(e).with(f))});
    }
  }
  return out;
}

std::vector<std::pair<int, int>> internal_pivots(const Graph& g, const std::vector<EdgeSet>& bases) {
  const auto index = index_of(bases);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(bases.size()); ++i) {
    const EdgeSet b1 = bases[i];
    for (int f : b1) {
      const int e = fundamental_cut(g, b1, f).min();
      if (e == f) continue;
      out.push_back({index.at(b1.without(f).with(e)), i});
    }
  }
  return out;
}

BasisPoset external_order(const Graph& g) {
  std::vector<EdgeSet> bases = maximal_spanning_forests(g);
  auto relations = external_pivots(g, bases);
  return make_poset(std::move(bases), std::move(relations), true, false);
}

BasisPoset internal_order(const Graph& g) {
  std::vector<EdgeSet> bases = maximal_spanning_forests(g);
  auto relations = internal_pivots(g, bases);
  return make_poset(std::move(bases), std::move(relations), false, true);
}

BasisPoset ext_int_order(const Graph& g) {
  std::vector<EdgeSet> bases = maximal_spanning_forests(g);
  auto relations = external_pivots(g, bases);
  for (auto pair : internal_pivots(g, bases)) relations.push_back(pair);
  return make_poset(std::move(bases), std::move(relations), false, false);
}

bool is_lattice(const BasisPoset& p) {
  if (!p.is_partial_order()) throw InputError("is_lattice: the relation is not a partial order");
  const int n = p.size();
  // Least element of `candidates` under p, or -1.
  auto least = [&](const std::vector<int>& candidates, bool reversed) {
    for (int c : candidates) {
      bool below_all = true;
      for (int d : candidates) below_all = below_all && (reversed ? p.leq(d, c) : p.leq(c, d));
      if (below_all) return c;
    }
    return -1;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> upper;
      std::vector<int> lower;
      for (int c = 0; c < n; ++c) {
        if (p.leq(a, c) && p.leq(b, c)) upper.push_back(c);
        if (p.leq(c, a) && p.leq(c, b)) lower.push_back(c);
      }
      if (least(upper, false) < 0 || least(lower, true) < 0) return false;
    }
  }
  return true;
}

}  // namespace tutte
