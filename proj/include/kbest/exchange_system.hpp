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

#ifndef KBEST_EXCHANGE_SYSTEM_HPP
#define KBEST_EXCHANGE_SYSTEM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kbest/errors.hpp"
#include "kbest/instance.hpp"
#include "kbest/spanning_tree.hpp"
#include "kbest/tour.hpp"
#include "kbest/tour_exchanges.hpp"
#include "kbest/tsp_solver.hpp"

namespace kbest {

/// A solution together with its exact weight, as handed to the engines.
template <typename S>
struct Candidate {
  S solution;  // canonical form
  Weight weight;
};

/// The Hamilton-cycle family of a complete instance, adapted to the engine
/// interface. Moves are the pure 2- and 3-edge exchanges; for tours the pool
/// neighborhood and the greedy candidate set coincide.
class TourSystem {
 public:
  using Solution = Tour;
  struct Less {
    bool operator()(const Tour& a, const Tour& b) const { return a.order() < b.order(); }
  };

  /// Throws IncompleteInstance; embed incomplete instances first.
  TourSystem(WeightedInstance inst, Objective objective)
      : inst_(std::move(inst)), objective_(objective) {
    if (!inst_.is_complete()) {
      throw IncompleteInstance("tour system needs a complete instance");
    }
  }

  const WeightedInstance& instance() const { return inst_; }
  Objective objective() const { return objective_; }

  /// Exact best tour, solved on first use and cached after that.
  const Tour& best() {
    if (!best_) best_ = best_tour(inst_, objective_);
    return *best_;
  }

  Weight weight(const Tour& t) const { return inst_.solution_weight(t.edges()); }
  bool uses_artificial(const Tour& t) const { return inst_.uses_artificial(t.edges()); }

  std::vector<Candidate<Tour>> neighbors(const Tour& t) const {
    Weight base = weight(t);
    std::vector<TourNeighbor> raw = neighborhood(inst_, t);
    std::vector<Candidate<Tour>> out;
    out.reserve(raw.size());
    for (TourNeighbor& nb : raw) out.push_back({std::move(nb.tour), base - nb.gain});
    return out;
  }

  std::vector<Candidate<Tour>> greedy_candidates(const Tour& t) const { return neighbors(t); }

 private:
  WeightedInstance inst_;
  Objective objective_;
  std::optional<Tour> best_;
};

/// The spanning-tree family of a connected instance. The pool neighborhood
/// uses single edge swaps only; the greedy candidate set widens to every
/// valid two-edge swap as well, because a greedy walk can need a step the
/// single swaps cannot express.
class TreeSystem {
 public:
  using Solution = SpanningTree;
  struct Less {
    bool operator()(const SpanningTree& a, const SpanningTree& b) const {
      return a.edges() < b.edges();
    }
  };

  TreeSystem(WeightedInstance inst, Objective objective)
      : inst_(std::move(inst)), objective_(objective) {}

  const WeightedInstance& instance() const { return inst_; }
  Objective objective() const { return objective_; }

  /// Best spanning tree, solved on first use; throws DisconnectedGraph.
  const SpanningTree& best() {
    if (!best_) best_ = best_spanning_tree(inst_, objective_);
    return *best_;
  }

  Weight weight(const SpanningTree& t) const { return inst_.solution_weight(t.edges()); }
  bool uses_artificial(const SpanningTree& t) const {
    return inst_.uses_artificial(t.edges());
  }

  std::vector<Candidate<SpanningTree>> neighbors(const SpanningTree& t) const {
    return apply_all(t, enumerate_1exchanges(inst_, t));
  }

  std::vector<Candidate<SpanningTree>> greedy_candidates(const SpanningTree& t) const {
    return apply_all(t, enumerate_tree_pairs(inst_, t));
  }

 private:
  std::vector<Candidate<SpanningTree>> apply_all(const SpanningTree& t,
                                                 const std::vector<ExchangePair>& moves) const {
    Weight base = weight(t);
    std::vector<Candidate<SpanningTree>> out;
    out.reserve(moves.size());
    for (const ExchangePair& p : moves) {
      Weight w = base;
      for (const EdgeId& e : p.removed()) w -= inst_.weight_of(e);
      for (const EdgeId& e : p.added()) w += inst_.weight_of(e);
      out.push_back({apply_tree_exchange(t, p), w});
    }
    return out;
  }

  WeightedInstance inst_;
  Objective objective_;
  std::optional<SpanningTree> best_;
};

}  // namespace kbest

#endif  // KBEST_EXCHANGE_SYSTEM_HPP
