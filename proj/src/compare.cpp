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

#include "kbest/compare.hpp"

#include <chrono>

namespace kbest {

namespace {

template <typename Fn>
std::chrono::nanoseconds timed(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
}

}  // namespace

EngineComparison<Tour> compare_tour_engines(const WeightedInstance& inst, int k,
                                            Objective objective) {
  EngineComparison<Tour> r;
  r.oracle_stats.elapsed =
      timed([&] { r.oracle = brute_force_kbest_tours(inst, k, objective); });
  TourSystem sys(inst, objective);
  r.pool = kbest_pool(sys, k, r.pool_stats);
  r.greedy = kbest_greedy(sys, k, r.greedy_stats);
  r.pool_vs_oracle = compare_ranked(r.pool, r.oracle);
  r.greedy_vs_oracle = compare_ranked(r.greedy, r.oracle);
  return r;
}

EngineComparison<SpanningTree> compare_tree_engines(const WeightedInstance& inst, int k,
                                                    Objective objective) {
  EngineComparison<SpanningTree> r;
  r.oracle_stats.elapsed =
      timed([&] { r.oracle = brute_force_kbest_trees(inst, k, objective); });
  TreeSystem sys(inst, objective);
  r.pool = kbest_pool(sys, k, r.pool_stats);
  r.greedy = kbest_greedy(sys, k, r.greedy_stats);
  r.pool_vs_oracle = compare_ranked(r.pool, r.oracle);
  r.greedy_vs_oracle = compare_ranked(r.greedy, r.oracle);
  return r;
}

}  // namespace kbest
