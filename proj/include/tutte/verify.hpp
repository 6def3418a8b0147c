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

#ifndef TUTTE_VERIFY_HPP
#define TUTTE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tutte/bernardi.hpp"
#include "tutte/dfs_activities.hpp"
#include "tutte/graph.hpp"
#include "tutte/polynomial.hpp"

namespace tutte {

enum class CheckStatus { kOk, kFailed, kSkipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kOk;
  std::string detail;  // mismatch description or skip reason
};

std::string to_string(CheckStatus status);

struct VerifyOptions {
  std::optional<VertexOrder> vertex_order;   // default: identity
  std::optional<CombinatorialMap> map;       // checked in addition to random maps
  int random_maps = 3;
  int random_decision_trees = 5;
  std::uint64_t seed = 1;
};

// Each check compares one expansion or structural statement against T(g)
// from the rank expansion and reports rather than throws. Preconditions that
// do not hold for g make the check kSkipped.
CheckResult check_delcon(const Graph& g, const MultiPoly& t);
CheckResult check_forest(const Graph& g, const MultiPoly& t);
CheckResult check_gt(const Graph& g, const MultiPoly& t);
CheckResult check_crapo(const Graph& g);
CheckResult check_dfs_definitions(const Graph& g, const VertexOrder& order);
CheckResult check_dfs(const Graph& g, const MultiPoly& t, const VertexOrder& order);
CheckResult check_bernardi(const Graph& g, const MultiPoly& t, const std::vector<CombinatorialMap>& maps);
CheckResult check_decision(const Graph& g, const MultiPoly& t, int random_trees, std::uint64_t seed);
CheckResult check_orientation(const Graph& g, const MultiPoly& t);
CheckResult check_acyclic_count(const Graph& g, const MultiPoly& t);
CheckResult check_bipartition(const Graph& g);
CheckResult check_convolution(const Graph& g, const MultiPoly& t);
CheckResult check_active_orders(const Graph& g);
CheckResult check_complexes(const Graph& g);

// gt(1, w, y, 1) = T(1 + w, y + 1) and gt(x, 0, 0, z) = T(x, z).
bool gt_specializations_hold(const MultiPoly& gt, const MultiPoly& t);

// The default map plus `count` seeded random maps. Requires g connected and
// loopless.
std::vector<CombinatorialMap> sample_maps(const Graph& g, int count, std::uint64_t seed);

std::vector<CheckResult> verify_all(const Graph& g, const VerifyOptions& options = {});

}  // namespace tutte

#endif  // TUTTE_VERIFY_HPP
