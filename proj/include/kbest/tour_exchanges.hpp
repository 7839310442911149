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

#ifndef KBEST_TOUR_EXCHANGES_HPP
#define KBEST_TOUR_EXCHANGES_HPP

#include <vector>

#include "kbest/instance.hpp"
#include "kbest/tour.hpp"

namespace kbest {

/// Every pair of non-adjacent tour edges together with the unique
/// reconnection that yields a different Hamilton cycle (classic 2-opt).
/// Exactly n(n-3)/2 pairs, sorted by (removed, added).
std::vector<ExchangePair> enumerate_2exchanges(const Tour& t);

/// Pure 3-edge exchanges: remove any three tour edges (adjacent triples
/// allowed) and reconnect the fragments in every way whose three new edges
/// all avoid the original tour. Deduplicated, sorted by (removed, added).
std::vector<ExchangePair> enumerate_3exchanges(const Tour& t);

struct TourNeighbor {
  Tour tour;          // canonical form
  ExchangePair pair;  // the unique pure exchange from the base tour
  Weight gain;        // c(removed) - c(added); applying changes weight by -gain
};

/// Union of 2- and 3-exchange results, one entry per distinct neighbor
/// cycle, base tour excluded, sorted by canonical tour order. Requires the
/// tour's own edges to be present in `inst`; candidate exchanges that would
/// add an absent edge are skipped, so on a complete instance every pure
/// exchange is represented.
std::vector<TourNeighbor> neighborhood(const WeightedInstance& inst, const Tour& t);

/// Expresses h2 as a sequence of exchanges applied to h with every removed
/// set inside h.edges minus h2.edges and every added set inside h2.edges
/// minus h.edges, so each prefix of the sequence is itself a valid tour and the
/// full sequence lands exactly on h2. Greedy: per step take the first 2-edge
/// (falling back to 3-edge) exchange that strictly shrinks the remaining
/// difference. Throws DecompositionFailure if no step applies; such a pair
/// (h, h2) would refute the exchange property and deserves archiving.
std::vector<ExchangePair> decompose_difference(const Tour& h, const Tour& h2);

}  // namespace kbest

#endif  // KBEST_TOUR_EXCHANGES_HPP
