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

#include "kbest/tsp_solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "kbest/errors.hpp"

namespace kbest {

Tour best_tour(const WeightedInstance& inst, Objective objective) {
  int n = inst.vertex_count();
  if (n < 3) throw InvalidParameter("a tour needs at least 3 vertices");
  if (n > kMaxExactTourVertices) {
    throw InstanceTooLarge("exact solver limited to " +
                           std::to_string(kMaxExactTourVertices) + " vertices, got " +
                           std::to_string(n));
  }
  if (!inst.is_complete()) {
    throw IncompleteInstance("exact solver needs a complete instance");
  }

  // Weight negation turns maximization into the minimization below.
  auto w = [&](int a, int b) {
    Weight c = inst.weight_of(EdgeId(a, b));
    return objective == Objective::kMin ? c : -c;
  };

  // dp[mask][j] = least weight of a path that starts at vertex 0, visits
  // exactly the vertices of mask (bit j-1 encodes vertex j), and ends at j.
  int m = n - 1;
  std::size_t rows = std::size_t{1} << m;
  std::vector<Weight> dp(rows * m);
  auto cell = [&](std::uint32_t mask, int j) -> Weight& {
    return dp[static_cast<std::size_t>(mask) * m + (j - 1)];
  };
  for (int j = 1; j < n; ++j) cell(std::uint32_t{1} << (j - 1), j) = w(0, j);
  for (std::uint32_t mask = 1; mask < rows; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // singletons are seeded above
    for (int j = 1; j < n; ++j) {
      std::uint32_t jbit = std::uint32_t{1} << (j - 1);
      if (!(mask & jbit)) continue;
      std::uint32_t rest = mask ^ jbit;
      bool first = true;
      Weight best{};
      for (int i = 1; i < n; ++i) {
        if (!(rest & (std::uint32_t{1} << (i - 1)))) continue;
        Weight cand = cell(rest, i) + w(i, j);
        if (first || cand < best) {
          best = cand;
          first = false;
        }
      }
      cell(mask, j) = best;
    }
  }

  std::uint32_t full = static_cast<std::uint32_t>(rows - 1);
  bool first = true;
  Weight opt{};
  for (int j = 1; j < n; ++j) {
    Weight cand = cell(full, j) + w(j, 0);
    if (first || cand < opt) {
      opt = cand;
      first = false;
    }
  }

  // Forward reconstruction. With rem the unvisited set and u the path end,
  // target holds the least completion weight u -> rem -> 0; by symmetry of
  // the undirected instance that completion equals dp[rem][v] + w(u,v) for
  // the right v, and taking the smallest feasible v at every step yields the
  // lexicographically least optimal order.
  std::vector<int> order;
  order.reserve(n);
  order.push_back(0);
  std::uint32_t rem = full;
  int u = 0;
  Weight target = opt;
  while (rem != 0) {
    bool advanced = false;
    for (int v = 1; v < n; ++v) {
      if (!(rem & (std::uint32_t{1} << (v - 1)))) continue;
      if (w(u, v) + cell(rem, v) == target) {
        order.push_back(v);
        target = cell(rem, v);
        rem ^= std::uint32_t{1} << (v - 1);
        u = v;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw Error("internal: tour reconstruction lost the optimum");
  }
  return Tour(std::move(order));
}

}  // namespace kbest
