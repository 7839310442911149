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

#include "kbest/tour_exchanges.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kbest/errors.hpp"

namespace kbest {

std::vector<ExchangePair> enumerate_2exchanges(const Tour& t) {
  int n = t.size();
  const std::vector<int>& ord = t.order();
  std::vector<ExchangePair> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
      EdgeId ei(ord[i], ord[i + 1]);
      EdgeId ej(ord[j], ord[(j + 1) % n]);
      // reconnect crosswise; the segment between gets traversed in reverse
      EdgeId a1(ord[i], ord[j]);
      EdgeId a2(ord[i + 1], ord[(j + 1) % n]);
      out.emplace_back(std::vector<EdgeId>{ei, ej}, std::vector<EdgeId>{a1, a2});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExchangePair> enumerate_3exchanges(const Tour& t) {
  int n = t.size();
  const std::vector<int>& ord = t.order();
  std::vector<EdgeId> tour_edges = t.edges();
  auto in_tour = [&](const EdgeId& e) {
    return std::binary_search(tour_edges.begin(), tour_edges.end(), e);
  };

  std::vector<ExchangePair> out;
  for (int p1 = 0; p1 < n; ++p1) {
    for (int p2 = p1 + 1; p2 < n; ++p2) {
      for (int p3 = p2 + 1; p3 < n; ++p3) {
        // Cutting edges (p, p+1) leaves three directed fragments; the one
        // ending at p1 stays fixed, the other two may swap order and flip.
        int head_x = ord[(p1 + 1) % n], tail_x = ord[p2];
        int head_y = ord[(p2 + 1) % n], tail_y = ord[p3];
        int head_z = ord[(p3 + 1) % n], tail_z = ord[p1];

        std::vector<EdgeId> removed = {EdgeId(ord[p1], head_x), EdgeId(tail_x, head_y),
                                       EdgeId(tail_y, head_z)};

        std::set<std::vector<EdgeId>> added_sets;
        for (int swap_xy = 0; swap_xy < 2; ++swap_xy) {
          int ph = swap_xy ? head_y : head_x, pt = swap_xy ? tail_y : tail_x;
          int qh = swap_xy ? head_x : head_y, qt = swap_xy ? tail_x : tail_y;
          for (int flip_p = 0; flip_p < 2; ++flip_p) {
            for (int flip_q = 0; flip_q < 2; ++flip_q) {
              int p_in = flip_p ? pt : ph, p_out = flip_p ? ph : pt;
              int q_in = flip_q ? qt : qh, q_out = flip_q ? qh : qt;
              EdgeId c1(tail_z, p_in);
              EdgeId c2(p_out, q_in);
              EdgeId c3(q_out, head_z);
              if (in_tour(c1) || in_tour(c2) || in_tour(c3)) continue;
              std::vector<EdgeId> added = {c1, c2, c3};
              std::sort(added.begin(), added.end());
              added_sets.insert(std::move(added));
            }
          }
        }
        for (const std::vector<EdgeId>& added : added_sets) {
          out.emplace_back(removed, added);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TourNeighbor> neighborhood(const WeightedInstance& inst, const Tour& t) {
  std::vector<ExchangePair> pairs = enumerate_2exchanges(t);
  std::vector<ExchangePair> three = enumerate_3exchanges(t);
  pairs.insert(pairs.end(), std::make_move_iterator(three.begin()),
               std::make_move_iterator(three.end()));

  std::vector<int> base = t.canonicalized().order();
  std::map<std::vector<int>, TourNeighbor> by_cycle;
  for (ExchangePair& p : pairs) {
    bool edges_exist = true;
    for (const EdgeId& e : p.added()) {
      if (!inst.has_edge(e)) {
        edges_exist = false;
        break;
      }
    }
    if (!edges_exist) continue;
    Weight gain = inst.solution_weight(p.removed()) - inst.solution_weight(p.added());
    Tour result = apply_exchange(t, p);  // canonical, from_edges rebuilds it
    if (result.order() == base) continue;
    auto [it, inserted] =
        by_cycle.try_emplace(result.order(), TourNeighbor{result, p, gain});
    if (!inserted && (gain > it->second.gain ||
                      (gain == it->second.gain && p < it->second.pair))) {
      it->second.pair = std::move(p);
      it->second.gain = gain;
    }
  }
  std::vector<TourNeighbor> out;
  out.reserve(by_cycle.size());
  for (auto& [order, nb] : by_cycle) out.push_back(std::move(nb));
  return out;
}

namespace {

// first k-subset combination walker over indices 0..m-1
bool next_combination(std::vector<int>& idx, int m) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < m - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ExchangePair> decompose_difference(const Tour& h, const Tour& h2) {
  if (h.size() != h2.size()) {
    throw InvalidParameter("cannot decompose tours of different sizes");
  }
  std::vector<EdgeId> target = h2.edges();
  auto in_target = [&](const EdgeId& e) {
    return std::binary_search(target.begin(), target.end(), e);
  };

  std::vector<ExchangePair> steps;
  Tour current = h;
  for (;;) {
    std::vector<EdgeId> cur_edges = current.edges();
    std::vector<EdgeId> removable, addable;
    for (const EdgeId& e : cur_edges) {
      if (!in_target(e)) removable.push_back(e);
    }
    for (const EdgeId& e : target) {
      if (!std::binary_search(cur_edges.begin(), cur_edges.end(), e)) addable.push_back(e);
    }
    if (removable.empty()) break;

    bool advanced = false;
    int m = static_cast<int>(removable.size());
    for (int k = 2; k <= 3 && !advanced; ++k) {
      if (m < k) continue;
      std::vector<int> ri(k), ai(k);
      for (int i = 0; i < k; ++i) ri[i] = i;
      do {
        for (int i = 0; i < k; ++i) ai[i] = i;
        do {
          std::vector<EdgeId> next_edges;
          next_edges.reserve(cur_edges.size());
          for (const EdgeId& e : cur_edges) {
            bool dropped = false;
            for (int i = 0; i < k; ++i) {
              if (removable[ri[i]] == e) {
                dropped = true;
                break;
              }
            }
            if (!dropped) next_edges.push_back(e);
          }
          for (int i = 0; i < k; ++i) next_edges.push_back(addable[ai[i]]);
          std::optional<Tour> next = Tour::from_edges(next_edges, current.size());
          if (next) {
            std::vector<EdgeId> removed(k, EdgeId(0, 1)), added(k, EdgeId(0, 1));
            for (int i = 0; i < k; ++i) {
              removed[i] = removable[ri[i]];
              added[i] = addable[ai[i]];
            }
            steps.emplace_back(std::move(removed), std::move(added));
            current = *next;
            advanced = true;
          }
        } while (!advanced && next_combination(ai, m));
      } while (!advanced && next_combination(ri, m));
    }
    if (!advanced) {
      throw DecompositionFailure("no 2- or 3-exchange reduces the difference further");
    }
  }
  return steps;
}

}  // namespace kbest
