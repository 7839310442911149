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

#ifndef KBEST_COMPARE_HPP
#define KBEST_COMPARE_HPP

#include <algorithm>

#include "kbest/engines.hpp"
#include "kbest/oracles.hpp"
#include "kbest/ranked_list.hpp"

namespace kbest {

inline bool same_solution(const Tour& a, const Tour& b) { return a.order() == b.order(); }
inline bool same_solution(const SpanningTree& a, const SpanningTree& b) { return a == b; }

/// Rank-by-rank verdict between two ranked lists over the same family.
/// Weights compare exactly; solutions compare by canonical form. A length
/// difference registers as divergence at the first missing rank.
struct RankDivergence {
  bool weights_match = true;
  bool solutions_match = true;
  int first_weight_divergence = 0;    // 1-based, 0 when none
  int first_solution_divergence = 0;  // 1-based, 0 when none

  bool match() const { return weights_match && solutions_match; }
};

template <typename S>
RankDivergence compare_ranked(const RankedList<S>& a, const RankedList<S>& b) {
  RankDivergence d;
  std::size_t common = std::min(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (d.weights_match && a.entries[i].weight != b.entries[i].weight) {
      d.weights_match = false;
      d.first_weight_divergence = static_cast<int>(i) + 1;
    }
    if (d.solutions_match && !same_solution(a.entries[i].solution, b.entries[i].solution)) {
      d.solutions_match = false;
      d.first_solution_divergence = static_cast<int>(i) + 1;
    }
  }
  if (a.entries.size() != b.entries.size()) {
    int rank = static_cast<int>(common) + 1;
    if (d.weights_match) {
      d.weights_match = false;
      d.first_weight_divergence = rank;
    }
    if (d.solutions_match) {
      d.solutions_match = false;
      d.first_solution_divergence = rank;
    }
  }
  return d;
}

/// One instance's full experiment: oracle ranking, both engine rankings,
/// stats, and the verdicts against the oracle.
template <typename S>
struct EngineComparison {
  RankedList<S> oracle;
  RankedList<S> pool;
  RankedList<S> greedy;
  EngineStats oracle_stats;  // only elapsed is meaningful
  EngineStats pool_stats;
  EngineStats greedy_stats;
  RankDivergence pool_vs_oracle;
  RankDivergence greedy_vs_oracle;
};

/// Runs the tour oracle and both engines at the same k on a complete
/// instance. Oracle limits apply; embed incomplete instances first.
EngineComparison<Tour> compare_tour_engines(const WeightedInstance& inst, int k,
                                            Objective objective = Objective::kMin);

/// Spanning-tree version; the instance must be connected.
EngineComparison<SpanningTree> compare_tree_engines(const WeightedInstance& inst, int k,
                                                    Objective objective = Objective::kMin);

}  // namespace kbest

#endif  // KBEST_COMPARE_HPP
