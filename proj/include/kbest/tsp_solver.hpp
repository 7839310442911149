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

#ifndef KBEST_TSP_SOLVER_HPP
#define KBEST_TSP_SOLVER_HPP

#include "kbest/instance.hpp"
#include "kbest/tour.hpp"

namespace kbest {

/// Largest vertex count best_tour accepts. The dynamic program stores
/// 2^(n-1) * (n-1) weights, about 18 MB at this bound.
inline constexpr int kMaxExactTourVertices = 18;

/// Exact optimum Hamilton cycle via the bitmask dynamic program over
/// (visited set, last vertex) states, O(2^n n^2) time.
///
/// Among all optimal tours, returns the one whose canonical form is
/// lexicographically least, so the result is deterministic under ties.
/// Requires a complete instance (embed incomplete ones first) with
/// 3 <= n <= kMaxExactTourVertices. Throws InvalidParameter,
/// IncompleteInstance, or InstanceTooLarge.
Tour best_tour(const WeightedInstance& inst, Objective objective = Objective::kMin);

}  // namespace kbest

#endif  // KBEST_TSP_SOLVER_HPP
