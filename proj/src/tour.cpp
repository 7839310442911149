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

#include "kbest/tour.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "kbest/errors.hpp"

namespace kbest {

Tour::Tour(std::vector<int> order) : order_(std::move(order)) {
  int n = static_cast<int>(order_.size());
  if (n < 3) throw InvalidParameter("a tour needs at least 3 vertices");
  std::vector<char> seen(n, 0);
  for (int v : order_) {
    if (v < 0 || v >= n || seen[v]) {
      throw InvalidParameter("tour order is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[v] = 1;
  }
}

std::optional<Tour> Tour::from_edges(std::span<const EdgeId> edge_set, int n) {
  if (n < 3 || static_cast<int>(edge_set.size()) != n) return std::nullopt;
  std::vector<std::array<int, 2>> adj(n, {-1, -1});
  for (const EdgeId& e : edge_set) {
    if (e.u < 0 || e.v >= n || e.u == e.v) return std::nullopt;
    for (int x : {e.u, e.v}) {
      int other = x == e.u ? e.v : e.u;
      if (adj[x][0] == -1) {
        adj[x][0] = other;
      } else if (adj[x][1] == -1) {
        adj[x][1] = other;
      } else {
        return std::nullopt;  // degree > 2
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (adj[v][1] == -1) return std::nullopt;  // degree < 2 (or duplicate edge)
  }
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> used(n, 0);
  int prev = -1;
  int cur = 0;
  for (int step = 0; step < n; ++step) {
    if (used[cur]) return std::nullopt;  // walk closed early: several cycles
    used[cur] = 1;
    order.push_back(cur);
    int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (cur != 0) return std::nullopt;  // walk did not close into one n-cycle
  return Tour(std::move(order)).canonicalized();
}

std::vector<EdgeId> Tour::edges() const {
  int n = size();
  std::vector<EdgeId> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.emplace_back(order_[i], order_[(i + 1) % n]);
  std::sort(out.begin(), out.end());
  return out;
}

Tour Tour::canonicalized() const {
  int n = size();
  int at0 = static_cast<int>(std::find(order_.begin(), order_.end(), 0) - order_.begin());
  std::vector<int> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i) {
    fwd[i] = order_[(at0 + i) % n];
    bwd[i] = order_[(at0 - i % n + n) % n];
  }
  // both start at 0 and differ at position 1, so one comparison decides
  return Tour(fwd[1] < bwd[1] ? std::move(fwd) : std::move(bwd));
}

bool Tour::is_canonical() const {
  return order_[0] == 0 && order_[1] < order_.back();
}

bool Tour::same_cycle(const Tour& other) const {
  if (size() != other.size()) return false;
  return canonicalized().order() == other.canonicalized().order();
}

ExchangePair::ExchangePair(std::vector<EdgeId> removed, std::vector<EdgeId> added)
    : removed_(std::move(removed)), added_(std::move(added)) {
  if (removed_.empty() || removed_.size() != added_.size()) {
    throw InvalidExchange("exchange sides must be non-empty and equal-sized");
  }
  std::sort(removed_.begin(), removed_.end());
  std::sort(added_.begin(), added_.end());
  if (std::adjacent_find(removed_.begin(), removed_.end()) != removed_.end() ||
      std::adjacent_find(added_.begin(), added_.end()) != added_.end()) {
    throw InvalidExchange("exchange side contains a duplicate edge");
  }
  std::vector<EdgeId> overlap;
  std::set_intersection(removed_.begin(), removed_.end(), added_.begin(), added_.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) {
    throw InvalidExchange("removed and added sets overlap");
  }
}

Tour apply_exchange(const Tour& t, const ExchangePair& p) {
  if (p.size() != 2 && p.size() != 3) {
    throw InvalidExchange("tour exchange size must be 2 or 3, got " +
                          std::to_string(p.size()));
  }
  std::vector<EdgeId> current = t.edges();
  for (const EdgeId& e : p.removed()) {
    if (!std::binary_search(current.begin(), current.end(), e)) {
      throw InvalidExchange("removed edge not in the tour");
    }
  }
  for (const EdgeId& e : p.added()) {
    if (std::binary_search(current.begin(), current.end(), e)) {
      throw InvalidExchange("added edge already in the tour");
    }
  }
  std::vector<EdgeId> next;
  next.reserve(current.size());
  std::set_difference(current.begin(), current.end(), p.removed().begin(), p.removed().end(),
                      std::back_inserter(next));
  next.insert(next.end(), p.added().begin(), p.added().end());
  std::optional<Tour> result = Tour::from_edges(next, t.size());
  if (!result) {
    throw InvalidExchange("exchange result is not a Hamilton cycle");
  }
  return *result;
}

}  // namespace kbest
