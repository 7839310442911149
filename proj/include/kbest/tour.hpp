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

#ifndef KBEST_TOUR_HPP
#define KBEST_TOUR_HPP

#include <optional>
#include <span>
#include <vector>

#include "kbest/instance.hpp"

namespace kbest {

/// Hamilton cycle over vertices 0..n-1, stored as a visiting order.
///
/// Two tours are the same cycle iff their edge sets agree; canonicalized()
/// rewrites the order into the unique representative that starts at vertex 0
/// and is lexicographically least between the two directions, which makes
/// cycle equality plain vector equality.
class Tour {
 public:
  /// Throws InvalidParameter unless `order` is a permutation of 0..n-1, n >= 3.
  explicit Tour(std::vector<int> order);

  /// Rebuilds a cycle from an edge set; nullopt unless the edges form a
  /// single Hamilton cycle on 0..n-1 (every vertex degree 2, one component).
  /// The result is in canonical form.
  static std::optional<Tour> from_edges(std::span<const EdgeId> edge_set, int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }

  /// Edge set in canonical EdgeId order.
  std::vector<EdgeId> edges() const;

  Tour canonicalized() const;
  bool is_canonical() const;

  /// Cycle identity, not representation identity.
  bool same_cycle(const Tour& other) const;

 private:
  std::vector<int> order_;
};

/// One exchange move: remove `removed` (inside the solution), add `added`
/// (outside it). Sizes are equal, members disjoint, and each side is free of
/// duplicates; the constructor enforces this and sorts both sides. Size
/// bounds are per solution family: {2,3} for tours, {1,2} for trees.
class ExchangePair {
 public:
  /// Throws InvalidExchange on size mismatch, empty sides, duplicates, or
  /// overlap between the two sides.
  ExchangePair(std::vector<EdgeId> removed, std::vector<EdgeId> added);

  const std::vector<EdgeId>& removed() const { return removed_; }
  const std::vector<EdgeId>& added() const { return added_; }
  std::size_t size() const { return removed_.size(); }

  friend auto operator<=>(const ExchangePair&, const ExchangePair&) = default;

 private:
  std::vector<EdgeId> removed_;
  std::vector<EdgeId> added_;
};

/// Applies a 2- or 3-edge exchange to a tour. Requires removed inside,
/// added outside; throws InvalidExchange if preconditions fail, the pair size
/// is not 2 or 3, or the result is not a Hamilton cycle.
Tour apply_exchange(const Tour& t, const ExchangePair& p);

}  // namespace kbest

#endif  // KBEST_TOUR_HPP
