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

#include "tutte/tutte_core.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "tutte/errors.hpp"

namespace tutte {

namespace {

// Builds sum over (i, j) of count * (x-1)^i (y-1)^j.
MultiPoly from_corank_nullity_counts(const std::map<std::pair<int, int>, long long>& counts) {
  MultiPoly x_minus_1 = MultiPoly::variable(kXY, "x") - MultiPoly::constant(kXY, 1);
  MultiPoly y_minus_1 = MultiPoly::variable(kXY, "y") - MultiPoly::constant(kXY, 1);
  MultiPoly out(kXY);
  for (const auto& [key, count] : counts) {
    out += MultiPoly::constant(kXY, count) * x_minus_1.pow(key.first) * y_minus_1.pow(key.second);
  }
  return out;
}

}  // namespace

MultiPoly tutte_whitney(const Graph& g) {
  require_exhaustive_cap(g, "tutte_whitney");
  const int full_rank = rank(g);
  std::map<std::pair<int, int>, long long> counts;
  const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    EdgeSet a(bits);
    int r = rank(g, a);
    ++counts[{full_rank - r, a.size() - r}];
  }
  return from_corank_nullity_counts(counts);
}

std::string canonical_key(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> neighbours(n);
  for (const Edge& e : g.edges()) {
    degree[e.u]++;
    degree[e.v]++;
    neighbours[e.u].push_back(e.v);
    if (!e.is_loop()) neighbours[e.v].push_back(e.u);
  }
  auto before = [&](int a, int b) { return degree[a] != degree[b] ? degree[a] > degree[b] : a < b; };

  std::vector<int> by_priority(n);
  for (int v = 0; v < n; ++v) by_priority[v] = v;
  std::sort(by_priority.begin(), by_priority.end(), before);

  std::vector<int> label(n, -1);
  int next = 0;
  for (int start : by_priority) {
    if (label[start] >= 0 || degree[start] == 0) continue;
    std::queue<int> frontier;
    label[start] = next++;
    frontier.push(start);
    while (!frontier.empty()) {
      int at = frontier.front();
      frontier.pop();
      std::vector<int> order = neighbours[at];
      std::sort(order.begin(), order.end(), before);
      for (int to : order) {
        if (label[to] >= 0) continue;
        label[to] = next++;
        frontier.push(to);
      }
    }
  }

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.push_back(std::minmax(label[e.u], label[e.v]));
  std::sort(pairs.begin(), pairs.end());
  std::string key = std::to_string(next) + ":";
  for (auto [a, b] : pairs) key += std::to_string(a) + "-" + std::to_string(b) + ",";
  return key;
}

namespace {

class DeletionContraction {
 public:
  MultiPoly solve(const Graph& g) {
    if (g.edge_count() == 0) return MultiPoly::constant(kXY, 1);
    std::string key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int pivot = g.edge_count() - 1;
    const EdgeSet just_pivot = EdgeSet::single(pivot);
    MultiPoly result(kXY);
    if (is_loop(g, pivot)) {
      result = y_ * solve(delete_edges(g, just_pivot));
    } else if (is_bridge(g, pivot)) {
      result = x_ * solve(contract_edges(g, just_pivot));
    } else {
      result = solve(delete_edges(g, just_pivot)) + solve(contract_edges(g, just_pivot));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  MultiPoly x_ = MultiPoly::variable(kXY, "x");
  MultiPoly y_ = MultiPoly::variable(kXY, "y");
  std::unordered_map<std::string, MultiPoly> memo_;
};

}  // namespace

MultiPoly tutte_delcon(const Graph& g) {
  // One cache per call keeps the function observably pure.
  DeletionContraction solver;
  return solver.solve(g);
}

MultiPoly shift_to_four_variables(const MultiPoly& t) {
  MultiPoly x = MultiPoly::variable(kXWYZ, "x") + MultiPoly::variable(kXWYZ, "w");
  MultiPoly y = MultiPoly::variable(kXWYZ, "y") + MultiPoly::variable(kXWYZ, "z");
  return t.substitute({{"x", x}, {"y", y}}, kXWYZ);
}

MultiPoly specialize(const MultiPoly& t, const std::string& variable, const Rational& value) {
  return t.substitute({{variable, MultiPoly::constant(t.variables(), value)}}, t.variables());
}

}  // namespace tutte
