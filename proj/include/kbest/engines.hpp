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

#ifndef KBEST_ENGINES_HPP
#define KBEST_ENGINES_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <utility>

#include "kbest/errors.hpp"
#include "kbest/exchange_system.hpp"
#include "kbest/ranked_list.hpp"

namespace kbest {

struct EngineStats {
  std::size_t pool_size_max = 0;
  std::size_t neighborhoods_expanded = 0;
  std::size_t exchanges_evaluated = 0;
  std::chrono::nanoseconds elapsed{0};

  /// Whole milliseconds as printed in artifacts. Desk-scale runs floor to a
  /// stable 0, which keeps repeated outputs identical byte for byte.
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
};

namespace detail {

/// Pool order: best weight first for the system's objective, canonical
/// solution order on ties.
template <typename System>
struct CandidateOrder {
  Objective objective;
  using C = Candidate<typename System::Solution>;
  bool operator()(const C& a, const C& b) const {
    if (a.weight != b.weight) {
      return objective == Objective::kMin ? a.weight < b.weight : a.weight > b.weight;
    }
    return typename System::Less{}(a.solution, b.solution);
  }
};

}  // namespace detail

/// K best by candidate pool.
///
/// Solutions are extracted best-first from a pool holding the neighbors of
/// everything extracted so far; each extracted solution is expanded exactly
/// once, right before the next extraction needs it, so the final pick is
/// never expanded. Solutions already seen are dropped on insert. If the pool
/// runs dry the picked set is closed under the move relation, which proves
/// the whole family has been listed, so `exhausted` is set.
///
/// Extraction order within an equal-weight block depends on when each member
/// became reachable, so the finished list is reordered canonically inside
/// each block (a permutation of ties only; the weight sequence and the
/// chosen set are untouched). Ranks are then 1..k_returned in list order.
template <typename System>
RankedList<typename System::Solution> kbest_pool(System& sys, int k, EngineStats& stats) {
  if (k < 1) throw InvalidParameter("k must be positive");
  auto start = std::chrono::steady_clock::now();
  stats = EngineStats{};
  using S = typename System::Solution;

  RankedList<S> out;
  out.objective = sys.objective();
  out.k_requested = k;

  std::set<S, typename System::Less> seen;
  std::set<Candidate<S>, detail::CandidateOrder<System>> pool(
      detail::CandidateOrder<System>{out.objective});

  S current = sys.best();
  seen.insert(current);
  out.entries.push_back({1, current, sys.weight(current), sys.uses_artificial(current)});

  while (static_cast<int>(out.entries.size()) < k) {
    std::vector<Candidate<S>> cands = sys.neighbors(current);
    ++stats.neighborhoods_expanded;
    stats.exchanges_evaluated += cands.size();
    for (Candidate<S>& c : cands) {
      if (seen.insert(c.solution).second) pool.insert(std::move(c));
    }
    stats.pool_size_max = std::max(stats.pool_size_max, pool.size());
    if (pool.empty()) {
      out.exhausted = true;
      break;
    }
    auto it = pool.begin();
    current = it->solution;
    Weight w = it->weight;
    pool.erase(it);
    out.entries.push_back({static_cast<int>(out.entries.size()) + 1, current, w,
                           sys.uses_artificial(current)});
  }

  std::sort(out.entries.begin(), out.entries.end(),
            [&](const RankedEntry<S>& a, const RankedEntry<S>& b) {
              if (a.weight != b.weight) {
                return out.objective == Objective::kMin ? a.weight < b.weight
                                                        : a.weight > b.weight;
              }
              return typename System::Less{}(a.solution, b.solution);
            });
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    out.entries[i].rank = static_cast<int>(i) + 1;
  }

  stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

/// K best by greedy walk.
///
/// From the current solution, steps to the best non-improving unseen
/// candidate: least weight at or above the current one when minimizing
/// (mirrored when maximizing), ties toward the canonical least. Stops when
/// no candidate qualifies, which certifies exhaustion only in the degenerate
/// case of a single-solution family; everywhere else a short list just means
/// the walk got stuck.
template <typename System>
RankedList<typename System::Solution> kbest_greedy(System& sys, int k, EngineStats& stats) {
  if (k < 1) throw InvalidParameter("k must be positive");
  auto start = std::chrono::steady_clock::now();
  stats = EngineStats{};
  using S = typename System::Solution;
  typename System::Less less{};

  RankedList<S> out;
  out.objective = sys.objective();
  out.k_requested = k;

  std::set<S, typename System::Less> seen;
  S current = sys.best();
  Weight current_w = sys.weight(current);
  seen.insert(current);
  out.entries.push_back({1, current, current_w, sys.uses_artificial(current)});

  while (static_cast<int>(out.entries.size()) < k) {
    std::vector<Candidate<S>> cands = sys.greedy_candidates(current);
    ++stats.neighborhoods_expanded;
    stats.exchanges_evaluated += cands.size();
    std::size_t pick = cands.size();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const Candidate<S>& c = cands[i];
      bool improving = out.objective == Objective::kMin ? c.weight < current_w
                                                        : c.weight > current_w;
      if (improving || seen.count(c.solution) != 0) continue;
      if (pick == cands.size()) {
        pick = i;
        continue;
      }
      const Candidate<S>& p = cands[pick];
      bool closer;
      if (c.weight != p.weight) {
        closer = out.objective == Objective::kMin ? c.weight < p.weight
                                                  : c.weight > p.weight;
      } else {
        closer = less(c.solution, p.solution);
      }
      if (closer) pick = i;
    }
    if (pick == cands.size()) {
      if (cands.empty() && out.entries.size() == 1) out.exhausted = true;
      break;
    }
    current = std::move(cands[pick].solution);
    current_w = cands[pick].weight;
    seen.insert(current);
    out.entries.push_back({static_cast<int>(out.entries.size()) + 1, current, current_w,
                           sys.uses_artificial(current)});
  }

  stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return out;
}

}  // namespace kbest

#endif  // KBEST_ENGINES_HPP
