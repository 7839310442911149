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

#include "kbest/spanning_tree.hpp"

#include <algorithm>
#include <numeric>

#include "kbest/errors.hpp"

namespace kbest {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent_[ra] = rb;
    return true;
  }

 private:
  std::vector<int> parent_;
};

bool forms_spanning_tree(std::span<const EdgeId> edge_set, int n) {
  if (n < 2 || static_cast<int>(edge_set.size()) != n - 1) return false;
  UnionFind uf(n);
  for (const EdgeId& e : edge_set) {
    if (e.u < 0 || e.v >= n || e.u == e.v) return false;
    if (!uf.unite(e.u, e.v)) return false;
  }
  return true;  // n-1 successful unions leave a single component
}

}  // namespace

SpanningTree::SpanningTree(std::vector<EdgeId> edge_set, int n)
    : edges_(std::move(edge_set)), n_(n) {
  if (!forms_spanning_tree(edges_, n)) {
    throw InvalidParameter("edge set is not a spanning tree");
  }
  std::sort(edges_.begin(), edges_.end());
}

std::optional<SpanningTree> SpanningTree::from_edges(std::span<const EdgeId> edge_set, int n) {
  if (!forms_spanning_tree(edge_set, n)) return std::nullopt;
  return SpanningTree(std::vector<EdgeId>(edge_set.begin(), edge_set.end()), n);
}

bool SpanningTree::contains(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

SpanningTree best_spanning_tree(const WeightedInstance& inst, Objective objective) {
  std::vector<EdgeId> edges = inst.edges();
  std::stable_sort(edges.begin(), edges.end(), [&](const EdgeId& a, const EdgeId& b) {
    Weight wa = inst.weight_of(a), wb = inst.weight_of(b);
    if (wa != wb) return objective == Objective::kMin ? wa < wb : wa > wb;
    return a < b;
  });
  int n = inst.vertex_count();
  UnionFind uf(n);
  std::vector<EdgeId> tree;
  tree.reserve(n - 1);
  for (const EdgeId& e : edges) {
    if (uf.unite(e.u, e.v)) tree.push_back(e);
  }
  if (static_cast<int>(tree.size()) != n - 1) {
    throw DisconnectedGraph("graph has no spanning tree");
  }
  return SpanningTree(std::move(tree), n);
}

std::vector<ExchangePair> enumerate_1exchanges(const WeightedInstance& inst,
                                               const SpanningTree& t) {
  int n = t.vertex_count();
  // adjacency over tree edges for path walking
  std::vector<std::vector<int>> adj(n);
  for (const EdgeId& e : t.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto tree_path = [&](int from, int to) {
    std::vector<int> parent(n, -1);
    std::vector<int> stack = {from};
    parent[from] = from;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == to) break;
      for (int y : adj[x]) {
        if (parent[y] == -1) {
          parent[y] = x;
          stack.push_back(y);
        }
      }
    }
    std::vector<EdgeId> path;
    for (int x = to; x != from; x = parent[x]) path.emplace_back(x, parent[x]);
    return path;
  };

  std::vector<ExchangePair> out;
  for (const EdgeId& e : inst.edges()) {
    if (t.contains(e)) continue;
    for (const EdgeId& f : tree_path(e.u, e.v)) {
      out.emplace_back(std::vector<EdgeId>{f}, std::vector<EdgeId>{e});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExchangePair> enumerate_tree_pairs(const WeightedInstance& inst,
                                               const SpanningTree& t) {
  std::vector<ExchangePair> out = enumerate_1exchanges(inst, t);
  int n = t.vertex_count();
  std::vector<EdgeId> outside;
  for (const EdgeId& e : inst.edges()) {
    if (!t.contains(e)) outside.push_back(e);
  }
  const std::vector<EdgeId>& inside = t.edges();
  for (std::size_t f1 = 0; f1 < inside.size(); ++f1) {
    for (std::size_t f2 = f1 + 1; f2 < inside.size(); ++f2) {
      std::vector<EdgeId> kept;
      kept.reserve(inside.size());
      for (std::size_t i = 0; i < inside.size(); ++i) {
        if (i != f1 && i != f2) kept.push_back(inside[i]);
      }
      for (std::size_t e1 = 0; e1 < outside.size(); ++e1) {
        for (std::size_t e2 = e1 + 1; e2 < outside.size(); ++e2) {
          std::vector<EdgeId> candidate = kept;
          candidate.push_back(outside[e1]);
          candidate.push_back(outside[e2]);
          if (forms_spanning_tree(candidate, n)) {
            out.emplace_back(std::vector<EdgeId>{inside[f1], inside[f2]},
                             std::vector<EdgeId>{outside[e1], outside[e2]});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpanningTree apply_tree_exchange(const SpanningTree& t, const ExchangePair& p) {
  if (p.size() != 1 && p.size() != 2) {
    throw InvalidExchange("tree exchange size must be 1 or 2, got " +
                          std::to_string(p.size()));
  }
  for (const EdgeId& e : p.removed()) {
    if (!t.contains(e)) throw InvalidExchange("removed edge not in the tree");
  }
  for (const EdgeId& e : p.added()) {
    if (t.contains(e)) throw InvalidExchange("added edge already in the tree");
  }
  std::vector<EdgeId> next;
  next.reserve(t.edges().size());
  std::set_difference(t.edges().begin(), t.edges().end(), p.removed().begin(),
                      p.removed().end(), std::back_inserter(next));
  next.insert(next.end(), p.added().begin(), p.added().end());
  std::optional<SpanningTree> result = SpanningTree::from_edges(next, t.vertex_count());
  if (!result) {
    throw InvalidExchange("exchange result is not a spanning tree");
  }
  return *result;
}

}  // namespace kbest
