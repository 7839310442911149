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

#ifndef KBEST_SPANNING_TREE_HPP
#define KBEST_SPANNING_TREE_HPP

#include <optional>
#include <span>
#include <vector>

#include "kbest/instance.hpp"
#include "kbest/tour.hpp"

namespace kbest {

/// Spanning tree on vertices 0..n-1, stored as its sorted edge list, which
/// doubles as the canonical form.
class SpanningTree {
 public:
  /// Throws InvalidParameter unless the edges form a spanning tree.
  SpanningTree(std::vector<EdgeId> edge_set, int n);

  /// nullopt unless the edges span 0..n-1 acyclically with n-1 edges.
  static std::optional<SpanningTree> from_edges(std::span<const EdgeId> edge_set, int n);

  int vertex_count() const { return n_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  bool contains(EdgeId e) const;

  friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;

 private:
  std::vector<EdgeId> edges_;
  int n_;
};

/// Minimum (or maximum) weight spanning tree by Kruskal's method with ties
/// broken by canonical edge order, which makes the result the canonically
/// least optimal tree. Throws DisconnectedGraph.
SpanningTree best_spanning_tree(const WeightedInstance& inst,
                                Objective objective = Objective::kMin);

/// All single-swap moves ({f}, {e}): e outside the tree, f on the unique
/// tree path between e's endpoints. Sorted by (removed, added).
std::vector<ExchangePair> enumerate_1exchanges(const WeightedInstance& inst,
                                               const SpanningTree& t);

/// Full exchangeable-pair set for trees: the single swaps plus every
/// size-2 pair (two edges out, two in) whose application is again a spanning
/// tree. Sorted by (removed, added). The greedy engine needs these; the pool
/// engine's neighborhood sticks to single swaps.
std::vector<ExchangePair> enumerate_tree_pairs(const WeightedInstance& inst,
                                               const SpanningTree& t);

/// Applies a size-1 or size-2 exchange. Throws InvalidExchange if
/// preconditions fail or the result is not a spanning tree.
SpanningTree apply_tree_exchange(const SpanningTree& t, const ExchangePair& p);

}  // namespace kbest

#endif  // KBEST_SPANNING_TREE_HPP
