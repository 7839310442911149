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

#ifndef KBEST_ORACLES_HPP
#define KBEST_ORACLES_HPP

#include "kbest/instance.hpp"
#include "kbest/ranked_list.hpp"
#include "kbest/spanning_tree.hpp"
#include "kbest/tour.hpp"

namespace kbest {

/// Brute-force limits. Tours enumerate (n-1)!/2 cycles (20160 at n = 9);
/// trees enumerate C(m, n-1) edge subsets.
inline constexpr int kMaxOracleTourVertices = 9;
inline constexpr int kMaxOracleTreeVertices = 7;

/// Ranks every Hamilton cycle of the instance by exhaustive enumeration and
/// returns the first k. Tours that would use an absent edge are skipped, so
/// incomplete instances rank their genuine cycles only (possibly none).
/// Ties break toward the lexicographically least canonical order.
/// `exhausted` is exact. Throws InvalidParameter (n < 3 or k < 1) and
/// InstanceTooLarge (n > kMaxOracleTourVertices).
RankedList<Tour> brute_force_kbest_tours(const WeightedInstance& inst, int k,
                                         Objective objective = Objective::kMin);

/// Same contract for spanning trees: ranks every spanning tree, ties toward
/// the lexicographically least edge list. Throws InvalidParameter (n < 2 or
/// k < 1) and InstanceTooLarge (n > kMaxOracleTreeVertices).
RankedList<SpanningTree> brute_force_kbest_trees(const WeightedInstance& inst, int k,
                                                 Objective objective = Objective::kMin);

}  // namespace kbest

#endif  // KBEST_ORACLES_HPP
