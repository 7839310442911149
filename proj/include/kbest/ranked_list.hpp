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

#ifndef KBEST_RANKED_LIST_HPP
#define KBEST_RANKED_LIST_HPP

#include <vector>

#include "kbest/instance.hpp"
#include "kbest/weight.hpp"

namespace kbest {

template <typename S>
struct RankedEntry {
  int rank = 0;  // 1-based
  S solution;    // canonical form
  Weight weight;
  bool uses_artificial = false;
};

/// Ranked prefix of a solution family: entry i is a best solution among
/// those not ranked before it, ties broken toward the canonically least.
/// `exhausted` is a proof of completeness: true only when the producer
/// certified that the entries are the entire family, never a guess.
template <typename S>
struct RankedList {
  Objective objective = Objective::kMin;
  int k_requested = 0;
  bool exhausted = false;
  std::vector<RankedEntry<S>> entries;
};

}  // namespace kbest

#endif  // KBEST_RANKED_LIST_HPP
