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

#include "tutte/verify.hpp"

#include <random>

#include "tutte/complexes.hpp"
#include "tutte/decision_activities.hpp"
#include "tutte/errors.hpp"
#include "tutte/forest_activities.hpp"
#include "tutte/orientation_activities.hpp"
#include "tutte/structure.hpp"
#include "tutte/subgraph_activities.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

namespace {

CheckResult ok(std::string name) { return {std::move(name), CheckStatus::kOk, ""}; }
CheckResult failed(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::kFailed, std::move(detail)};
}
CheckResult skipped(std::string name, std::string reason) {
  return {std::move(name), CheckStatus::kSkipped, std::move(reason)};
}

CheckResult compare(std::string name, const MultiPoly& got, const MultiPoly& want) {
  if (got == want) return ok(std::move(name));
  return failed(std::move(name), "got " + got.to_string() + ", expected " + want.to_string());
}

MultiPoly in_four_variables(const MultiPoly& t, const std::string& x_image, const std::string& y_image) {
  return t.substitute({{"x", MultiPoly::variable(kXWYZ, x_image)}, {"y", MultiPoly::variable(kXWYZ, y_image)}},
                      kXWYZ);
}

MultiPoly constant4(int c) { return MultiPoly::constant(kXWYZ, c); }

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kOk:
      return "OK";
    case CheckStatus::kFailed:
      return "FAILED";
    case CheckStatus::kSkipped:
      return "SKIPPED";
  }
  return "?";
}

bool gt_specializations_hold(const MultiPoly& gt, const MultiPoly& t) {
  const MultiPoly w = MultiPoly::variable(kXWYZ, "w");
  const MultiPoly y = MultiPoly::variable(kXWYZ, "y");
  const MultiPoly whitney_side = gt.substitute({{"x", constant4(1)}, {"z", constant4(1)}}, kXWYZ);
  const MultiPoly whitney_want =
      t.substitute({{"x", constant4(1) + w}, {"y", y + constant4(1)}}, kXWYZ);
  const MultiPoly tutte_side = gt.substitute({{"w", constant4(0)}, {"y", constant4(0)}}, kXWYZ);
  const MultiPoly tutte_want = in_four_variables(t, "x", "z");
  return whitney_side == whitney_want && tutte_side == tutte_want;
}

CheckResult check_delcon(const Graph& g, const MultiPoly& t) {
  return compare("deletion-contraction", tutte_delcon(g), t);
}

CheckResult check_forest(const Graph& g, const MultiPoly& t) {
  return compare("forest activities", tutte_forest_expansion(g), t);
}

CheckResult check_gt(const Graph& g, const MultiPoly& t) {
  const MultiPoly gt = gt_expansion(g);
  CheckResult full = compare("subgraph activities", gt, shift_to_four_variables(t));
  if (full.status != CheckStatus::kOk) return full;
  if (!gt_specializations_hold(gt, t)) return failed(full.name, "specializations (1,w,y,1) or (x,0,0,z) differ");
  return full;
}

CheckResult check_crapo(const Graph& g) {
  const std::string name = "crapo intervals";
  if (!crapo_verify(g)) return failed(name, "intervals overlap or miss a subset");
  long long total = 0;
  for (const CrapoInterval& interval : crapo_intervals(g)) total += interval.size();
  if (total != (1LL << g.edge_count())) return failed(name, "interval sizes sum to " + std::to_string(total));
  return ok(name);
}

CheckResult check_dfs_definitions(const Graph& g, const VertexOrder& order) {
  const std::string name = "dfs definition vs search";
  if (!is_connected(g) || has_parallel_edges(g)) return skipped(name, "needs a connected graph without parallel edges");
  for (EdgeSet t : maximal_spanning_forests(g)) {
    RootedForest rooted = root_spanning_tree(g, t, order);
    for (int e : t.complement(g.edge_count())) {
      if (dfs_external_active(g, rooted, e, order) != dfs_external_active_by_search(g, rooted, e, order)) {
        return failed(name, "tree " + t.to_string() + ", edge e" + std::to_string(e));
      }
    }
  }
  return ok(name);
}

CheckResult check_dfs(const Graph& g, const MultiPoly& t, const VertexOrder& order) {
  const std::string name = "dfs activities";
  if (!is_connected(g) || has_parallel_edges(g)) return skipped(name, "needs a connected graph without parallel edges");
  return compare(name, dfs_expansion(g, order), t);
}

CheckResult check_bernardi(const Graph& g, const MultiPoly& t, const std::vector<CombinatorialMap>& maps) {
  const std::string name = "embedding activities";
  if (!is_connected(g) || has_loops(g)) return skipped(name, "needs a connected loopless graph");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    CheckResult r = compare(name, bernardi_expansion(maps[i]), t);
    if (r.status != CheckStatus::kOk) {
      r.detail = "map " + std::to_string(i) + ": " + r.detail;
      return r;
    }
  }
  return ok(name);
}

CheckResult check_decision(const Graph& g, const MultiPoly& t, int random_trees, std::uint64_t seed) {
  const std::string name = "decision-tree activities";
  const MultiPoly want = shift_to_four_variables(t);
  std::vector<DecisionTree> trees = {DecisionTree::constant_order(g.edge_count())};
  for (int i = 0; i < random_trees; ++i) trees.push_back(DecisionTree::seeded_random(g.edge_count(), seed + i));
  for (std::size_t i = 0; i < trees.size(); ++i) {
    CheckResult r = compare(name, gm_expansion(g, trees[i]), want);
    if (r.status != CheckStatus::kOk) {
      r.detail = "tree " + std::to_string(i) + ": " + r.detail;
      return r;
    }
  }
  return ok(name);
}

CheckResult check_orientation(const Graph& g, const MultiPoly& t) {
  const std::string name = "orientation activities";
  CheckResult four = compare(name, orientation_expansion_4var(g), shift_to_four_variables(t));
  if (four.status != CheckStatus::kOk) return four;
  const MultiPoly t_uv =
      t.substitute({{"x", MultiPoly::variable(kUV, "u")}, {"y", MultiPoly::variable(kUV, "v")}}, kUV);
  try {
    return compare(name, orientation_expansion_2var(g), t_uv);
  } catch (const TheoremViolation& e) {
    return failed(name, e.what());
  }
}

CheckResult check_acyclic_count(const Graph& g, const MultiPoly& t) {
  const std::string name = "acyclic orientations";
  const Rational want = t.evaluate({{"x", 2}, {"y", 0}});
  const Rational got(count_acyclic_orientations(g));
  if (got == want) return ok(name);
  return failed(name, "counted " + to_string(got) + ", T(2,0) = " + to_string(want));
}

CheckResult check_bipartition(const Graph& g) {
  const std::string name = "activity bipartition";
  for (EdgeSet f : maximal_spanning_forests(g)) {
    const auto found = activity_bipartition_candidates(g, f);
    if (found.size() != 1) {
      return failed(name, "forest " + f.to_string() + " has " + std::to_string(found.size()) + " candidates");
    }
  }
  return ok(name);
}

CheckResult check_convolution(const Graph& g, const MultiPoly& t) {
  return compare("convolution", convolution_sum(g), t);
}

CheckResult check_active_orders(const Graph& g) {
  const std::string name = "active orders";
  const std::pair<const char*, BasisPoset> posets[] = {
      {"external", external_order(g)}, {"internal", internal_order(g)}, {"ext/int", ext_int_order(g)}};
  for (const auto& [label, p] : posets) {
    if (!p.is_partial_order()) return failed(name, std::string(label) + " order is not antisymmetric");
    if (!is_lattice(p)) return failed(name, std::string(label) + " order is not a lattice");
  }
  return ok(name);
}

CheckResult check_complexes(const Graph& g) {
  const std::string name = "complex h-polynomials";
  if (!verify_independence_h(g)) return failed(name, "h(IN) differs from T(x,1)");
  if (!h_polynomial(independence_complex(g)).has_nonnegative_integer_coefficients()) {
    return failed(name, "h-vector of IN has a negative entry");
  }
  if (has_loops(g)) return skipped(name, "IN identity holds; NBC needs a loopless graph");
  if (!verify_nbc_h(g)) return failed(name, "h(NBC) differs from T(x,0)");
  return ok(name);
}

std::vector<CombinatorialMap> sample_maps(const Graph& g, int count, std::uint64_t seed) {
  std::vector<CombinatorialMap> out = {CombinatorialMap::standard(g)};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) out.push_back(CombinatorialMap::random(g, rng));
  return out;
}

std::vector<CheckResult> verify_all(const Graph& g, const VerifyOptions& options) {
  const MultiPoly t = tutte_whitney(g);
  const VertexOrder order = options.vertex_order.value_or(VertexOrder::identity(g.vertex_count()));
  if (order.size() != g.vertex_count()) throw InputError("vertex order size does not match the graph");

  std::vector<CombinatorialMap> maps;
  if (is_connected(g) && !has_loops(g)) {
    maps = sample_maps(g, options.random_maps, options.seed);
    if (options.map) maps.push_back(*options.map);
  }

  return {
      check_delcon(g, t),
      check_forest(g, t),
      check_gt(g, t),
      check_crapo(g),
      check_dfs_definitions(g, order),
      check_dfs(g, t, order),
      check_bernardi(g, t, maps),
      check_decision(g, t, options.random_decision_trees, options.seed),
      check_orientation(g, t),
      check_acyclic_count(g, t),
      check_bipartition(g),
      check_convolution(g, t),
      check_active_orders(g),
      check_complexes(g),
  };
}

}  // namespace tutte
