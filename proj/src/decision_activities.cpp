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

#include "tutte/decision_activities.hpp"

#include <memory>
#include <numeric>
#include <random>

#include "tutte/errors.hpp"
#include "tutte/tutte_core.hpp"

namespace tutte {

DecisionTree::DecisionTree(int edge_count, Chooser chooser) : edge_count_(edge_count), chooser_(std::move(chooser)) {
  if (edge_count < 0 || edge_count > kMaxEdges) throw InputError("decision tree edge count out of range");
  if (!chooser_) throw InputError("decision tree needs a chooser");
}

DecisionTree DecisionTree::explicit_tree(int edge_count, std::vector<int> labels) {
  if (edge_count > kExplicitDecisionTreeCap) {
    throw CapExceeded("explicit decision tree on " + std::to_string(edge_count) + " edges", kExplicitDecisionTreeCap);
  }
  const std::size_t nodes = (std::size_t{1} << edge_count) - 1;
  if (labels.size() != nodes) throw InputError("explicit decision tree needs 2^m - 1 labels");
  // Every root-to-node path must repeat no edge.
  std::vector<std::uint64_t> used(nodes, 0);
  for (std::size_t i = 0; i < nodes; ++i) {
    const int e = labels[i];
    if (e < 0 || e >= edge_count) throw InputError("decision tree label out of range");
    const std::uint64_t above = i == 0 ? 0 : used[(i - 1) / 2];
    if ((above >> e) & 1) throw InputError("decision tree repeats edge " + std::to_string(e) + " on a path");
    used[i] = above | (std::uint64_t{1} << e);
  }
  auto shared = std::make_shared<const std::vector<int>>(std::move(labels));
  return DecisionTree(edge_count, [shared](std::span<const Decision> path) {
    std::size_t node = 0;
    for (const Decision& step : path) node = 2 * node + (step.right ? 2 : 1);
    return (*shared)[node];
  });
}

DecisionTree DecisionTree::constant_order(std::vector<int> order) {
  const int m = static_cast<int>(order.size());
  return DecisionTree(m, [order = std::move(order)](std::span<const Decision> path) { return order[path.size()]; });
}

DecisionTree DecisionTree::constant_order(int edge_count) {
  std::vector<int> order(edge_count);
  std::iota(order.begin(), order.end(), 0);
  return constant_order(std::move(order));
}

DecisionTree DecisionTree::seeded_random(int edge_count, std::uint64_t seed) {
  return DecisionTree(edge_count, [edge_count, seed](std::span<const Decision> path) {
    std::vector<std::uint32_t> words = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    for (const Decision& step : path) words.push_back(static_cast<std::uint32_t>(2 * step.edge + step.right));
    std::seed_seq mix_input(words.begin(), words.end());
    std::mt19937_64 rng(mix_input);
    std::vector<int> remaining;
    EdgeSet taken;
    for (const Decision& step : path) taken.insert(step.edge);
    for (int e = 0; e < edge_count; ++e) {
      if (!taken.contains(e)) remaining.push_back(e);
    }
    return remaining[std::uniform_int_distribution<std::size_t>(0, remaining.size() - 1)(rng)];
  });
}

int DecisionTree::next(std::span<const Decision> path) const {
  if (static_cast<int>(path.size()) >= edge_count_) throw InputError("decision tree path is already a leaf");
  const int e = chooser_(path);
  if (e < 0 || e >= edge_count_) throw InputError("decision tree label out of range");
  for (const Decision& step : path) {
    if (step.edge == e) throw InputError("decision tree repeats edge " + std::to_string(e) + " on a path");
  }
  return e;
}

std::vector<int> DecisionTree::materialize() const {
  if (edge_count_ > kExplicitDecisionTreeCap) {
    throw CapExceeded("explicit decision tree on " + std::to_string(edge_count_) + " edges", kExplicitDecisionTreeCap);
  }
  const std::size_t nodes = (std::size_t{1} << edge_count_) - 1;
  std::vector<int> labels(nodes);
  std::vector<Decision> path;
  for (std::size_t i = 0; i < nodes; ++i) {
    // Rebuild the path to node i from its heap index.
    path.clear();
    std::vector<bool> branches;
    for (std::size_t at = i; at != 0; at = (at - 1) / 2) branches.push_back(at % 2 == 0);
    std::size_t node = 0;
    for (auto it = branches.rbegin(); it != branches.rend(); ++it) {
      path.push_back({labels[node], *it});
      node = 2 * node + (*it ? 2 : 1);
    }
    labels[i] = next(path);
  }
  return labels;
}

GMPartition gm_partition(const Graph& g, const DecisionTree& d, EdgeSet s) {
  const int m = g.edge_count();
  if (d.edge_count() != m) throw InputError("decision tree and graph have different edge counts");
  GMPartition out;
  EdgeSet contracted;
  EdgeSet remaining = g.all_edges();
  std::vector<Decision> path;
  for (int step = 0; step < m; ++step) {
    const int e = d.next(path);
    // Status of e in the current minor G / contracted - (deleted edges).
    const EdgeSet kept = contracted | remaining;
    const bool bridge = rank(g, kept) > rank(g, kept.without(e));
    const bool loop = rank(g, contracted.with(e)) == rank(g, contracted);
    remaining.erase(e);
    bool contract = false;
    if (bridge) {
      out.internal.insert(e);
      contract = true;
    } else if (loop) {
      out.external.insert(e);
    } else if (s.contains(e)) {
      out.subgraph_internal.insert(e);
      contract = true;
    } else {
      out.subgraph_external.insert(e);
    }
    if (contract) contracted.insert(e);
    path.push_back({e, contract});
  }
  return out;
}

MultiPoly gm_expansion(const Graph& g, const DecisionTree& d) {
  require_exhaustive_cap(g, "gm_expansion");
  const int m = g.edge_count();
  const EdgeSet all = g.all_edges();
  MultiPoly out(kXWYZ);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const EdgeSet s(bits);
    const EdgeSet absent = all - s;
    GMPartition p = gm_partition(g, d, s);
    out.add_term({static_cast<unsigned>((s & p.internal).size()), static_cast<unsigned>((absent & p.internal).size()),
                  static_cast<unsigned>((absent & p.external).size()), static_cast<unsigned>((s & p.external).size())},
                 1);
  }
  return out;
}

}  // namespace tutte
