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

#ifndef KBEST_INSTANCE_HPP
#define KBEST_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kbest/weight.hpp"

namespace kbest {

/// Undirected edge in canonical orientation u < v.
struct EdgeId {
  int u;
  int v;

  EdgeId(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

enum class Objective { kMin, kMax };

/// Minimization on weights c is equivalent to maximization on -c and vice
/// versa; engines use this to treat both modes uniformly.
inline Objective flip(Objective o) {
  return o == Objective::kMin ? Objective::kMax : Objective::kMin;
}

/// Simple undirected weighted graph on vertices 0..n-1.
///
/// Immutable once built: construct, add_edge() every edge, then share freely.
/// Edges added by embed_complete() are flagged artificial so solutions that
/// use them can be told apart from genuine ones.
class WeightedInstance {
 public:
  explicit WeightedInstance(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  bool is_complete() const {
    return edge_count_ == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  }

  /// Throws SelfLoop, VertexOutOfRange, or DuplicateEdge.
  void add_edge(EdgeId e, Weight w, bool artificial = false);

  bool has_edge(EdgeId e) const;
  /// Throws UnknownEdge for absent edges.
  Weight weight_of(EdgeId e) const;
  bool is_artificial(EdgeId e) const;

  /// All edges in canonical EdgeId order.
  std::vector<EdgeId> edges() const;
  /// Artificial edges in canonical EdgeId order.
  std::vector<EdgeId> artificial_edges() const;

  /// Exact sum of the given edges' weights. Throws UnknownEdge.
  Weight solution_weight(std::span<const EdgeId> edge_set) const;
  /// True iff any of the given edges is artificial.
  bool uses_artificial(std::span<const EdgeId> edge_set) const;

  bool operator==(const WeightedInstance& other) const;

 private:
  std::size_t index(EdgeId e) const { return static_cast<std::size_t>(e.u) * n_ + e.v; }

  int n_;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> present_;
  std::vector<std::uint8_t> artificial_;
  std::vector<Weight> weight_;
};

/// Reads the edge-list format:
///
///   # comment
///   n <vertex count>
///   e <u> <v> <weight>
///
/// The n line must come first (ignoring comments and blank lines) and appear
/// exactly once; vertices are 0-based. Throws ParseError and its refinements
/// with 1-based line numbers.
WeightedInstance parse_instance(std::istream& in);
WeightedInstance parse_instance(std::string_view text);

/// Inverse of parse_instance: "n" line, then edges sorted by canonical
/// EdgeId. parse(serialize(x)) == x. Artificial flags are process-local state
/// and are not serialized.
std::string serialize_instance(const WeightedInstance& inst);

struct EmbedResult {
  WeightedInstance instance;
  Weight big_m;
};

/// Completes the graph by giving every missing edge the prohibitive weight
/// M = sum of |c(e)| + 1 (negated in max mode), flagged artificial. Any tour
/// through an artificial edge then ranks strictly after every real tour.
/// Embedding a complete instance returns it unchanged with M as documented.
/// Throws WeightOverflow if M or M*n is not representable.
EmbedResult embed_complete(const WeightedInstance& inst,
                           Objective objective = Objective::kMin);

/// Deterministic random instance: every candidate edge is kept with
/// probability `density` (1 keeps all) and weighted with a whole-unit weight
/// drawn uniformly from [wmin, wmax]. Identical (n, wmin, wmax, seed,
/// density) yield identical instances on every platform.
/// Requires n >= 3, wmin <= wmax, 0 < density <= 1.
WeightedInstance random_instance(int n, Weight wmin, Weight wmax, std::uint64_t seed,
                                 double density = 1.0);

}  // namespace kbest

#endif  // KBEST_INSTANCE_HPP
