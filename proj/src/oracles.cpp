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

#include "kbest/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "kbest/errors.hpp"

namespace kbest {

namespace {

template <typename S, typename KeyLess>
RankedList<S> rank_and_truncate(std::vector<std::pair<Weight, S>> all, int k,
                                Objective objective, const WeightedInstance& inst,
                                KeyLess key_less) {
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) {
      return objective == Objective::kMin ? a.first < b.first : a.first > b.first;
    }
    return key_less(a.second, b.second);
  });
  RankedList<S> out;
  out.objective = objective;
  out.k_requested = k;
  out.exhausted = static_cast<int>(all.size()) <= k;
  std::size_t take = std::min<std::size_t>(all.size(), static_cast<std::size_t>(k));
  out.entries.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    bool artificial = inst.uses_artificial(all[i].second.edges());
    out.entries.push_back({static_cast<int>(i) + 1, std::move(all[i].second),
                           all[i].first, artificial});
  }
  return out;
}

}  // namespace

RankedList<Tour> brute_force_kbest_tours(const WeightedInstance& inst, int k,
                                         Objective objective) {
  int n = inst.vertex_count();
  if (n < 3) throw InvalidParameter("a tour needs at least 3 vertices");
  if (k < 1) throw InvalidParameter("k must be positive");
  if (n > kMaxOracleTourVertices) {
    throw InstanceTooLarge("tour oracle limited to " +
                           std::to_string(kMaxOracleTourVertices) + " vertices, got " +
                           std::to_string(n));
  }

  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<std::pair<Weight, Tour>> all;
  do {
    // one representative per cycle: fix vertex 0 first and keep the
    // direction whose second vertex is the smaller, i.e. the canonical form
    if (rest.size() > 1 && rest.front() > rest.back()) continue;
    bool complete_cycle = inst.has_edge(EdgeId(0, rest.front()));
    Weight sum = complete_cycle ? inst.weight_of(EdgeId(0, rest.front())) : Weight{};
    for (std::size_t i = 0; complete_cycle && i + 1 < rest.size(); ++i) {
      EdgeId e(rest[i], rest[i + 1]);
      if (!inst.has_edge(e)) {
        complete_cycle = false;
        break;
      }
      sum += inst.weight_of(e);
    }
    if (complete_cycle) {
      EdgeId closing(rest.back(), 0);
      complete_cycle = inst.has_edge(closing);
      if (complete_cycle) sum += inst.weight_of(closing);
    }
    if (!complete_cycle) continue;
    std::vector<int> order;
    order.reserve(n);
    order.push_back(0);
    order.insert(order.end(), rest.begin(), rest.end());
    all.emplace_back(sum, Tour(std::move(order)));
  } while (std::next_permutation(rest.begin(), rest.end()));

  return rank_and_truncate(std::move(all), k, objective, inst,
                           [](const Tour& a, const Tour& b) { return a.order() < b.order(); });
}

RankedList<SpanningTree> brute_force_kbest_trees(const WeightedInstance& inst, int k,
                                                 Objective objective) {
  int n = inst.vertex_count();
  if (k < 1) throw InvalidParameter("k must be positive");
  if (n > kMaxOracleTreeVertices) {
    throw InstanceTooLarge("tree oracle limited to " +
                           std::to_string(kMaxOracleTreeVertices) + " vertices, got " +
                           std::to_string(n));
  }

  std::vector<EdgeId> edges = inst.edges();
  int m = static_cast<int>(edges.size());
  int r = n - 1;
  std::vector<std::pair<Weight, SpanningTree>> all;
  if (r <= m) {
    std::vector<int> pick(r);
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<EdgeId> subset;
    while (true) {
      subset.clear();
      for (int idx : pick) subset.push_back(edges[idx]);
      if (auto t = SpanningTree::from_edges(subset, n)) {
        all.emplace_back(inst.solution_weight(subset), std::move(*t));
      }
      // next r-combination of {0..m-1} in lexicographic order
      int i = r - 1;
      while (i >= 0 && pick[i] == m - r + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  return rank_and_truncate(std::move(all), k, objective, inst,
                           [](const SpanningTree& a, const SpanningTree& b) {
                             return a.edges() < b.edges();
                           });
}

}  // namespace kbest
