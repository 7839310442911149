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

#include <optional>
#include <vector>

#include "doctest.h"
#include "kbest/errors.hpp"
#include "kbest/tour.hpp"

using namespace kbest;

TEST_CASE("Tour rejects non-permutations") {
  CHECK_THROWS_AS(Tour({0, 1}), InvalidParameter);           // too short
  CHECK_THROWS_AS(Tour({0, 1, 1}), InvalidParameter);        // repeat
  CHECK_THROWS_AS(Tour({0, 1, 3}), InvalidParameter);        // gap
  CHECK_THROWS_AS(Tour({1, 2, 4, 3}), InvalidParameter);     // missing 0
  CHECK_THROWS_AS(Tour(std::vector<int>{}), InvalidParameter);
  CHECK(Tour({2, 0, 1}).size() == 3);
}

TEST_CASE("canonical form starts at 0 and takes the lesser direction") {
  Tour t({2, 1, 0, 3});
  CHECK_FALSE(t.is_canonical());
  CHECK(t.canonicalized().order() == std::vector<int>{0, 1, 2, 3});
  CHECK(t.canonicalized().is_canonical());

  // direction tie-break: after 0, prefer the smaller neighbor
  CHECK(Tour({0, 3, 1, 2}).canonicalized().order() == std::vector<int>{0, 2, 1, 3});
  CHECK(Tour({0, 1, 2, 3}).is_canonical());
  CHECK_FALSE(Tour({0, 3, 2, 1}).is_canonical());
  // canonicalizing twice is a no-op
  Tour c = Tour({4, 3, 0, 2, 1}).canonicalized();
  CHECK(c.canonicalized().order() == c.order());
}

TEST_CASE("edges are reported in canonical EdgeId order") {
  CHECK(Tour({0, 2, 1, 3}).edges() ==
        std::vector<EdgeId>{EdgeId(0, 2), EdgeId(0, 3), EdgeId(1, 2), EdgeId(1, 3)});
  CHECK(Tour({0, 1, 2}).edges() ==
        std::vector<EdgeId>{EdgeId(0, 1), EdgeId(0, 2), EdgeId(1, 2)});
}

TEST_CASE("same_cycle ignores rotation and direction") {
  Tour a({0, 1, 2, 3});
  CHECK(a.same_cycle(Tour({2, 3, 0, 1})));
  CHECK(a.same_cycle(Tour({0, 3, 2, 1})));
  CHECK_FALSE(a.same_cycle(Tour({0, 2, 1, 3})));
}

TEST_CASE("from_edges rebuilds exactly the Hamilton cycles") {
  std::optional<Tour> t =
      Tour::from_edges(std::vector<EdgeId>{EdgeId(0, 2), EdgeId(0, 3), EdgeId(1, 2), EdgeId(1, 3)}, 4);
  REQUIRE(t.has_value());
  CHECK(t->is_canonical());
  CHECK(t->order() == std::vector<int>{0, 2, 1, 3});

  // two disjoint triangles: right degrees, wrong component count
  CHECK_FALSE(Tour::from_edges(std::vector<EdgeId>{EdgeId(0, 1), EdgeId(1, 2), EdgeId(0, 2),
                                                   EdgeId(3, 4), EdgeId(4, 5), EdgeId(3, 5)},
                               6)
                  .has_value());
  // wrong edge count
  CHECK_FALSE(Tour::from_edges(std::vector<EdgeId>{EdgeId(0, 1), EdgeId(1, 2)}, 4).has_value());
  // star: degree 3 at the hub
  CHECK_FALSE(Tour::from_edges(std::vector<EdgeId>{EdgeId(0, 1), EdgeId(0, 2), EdgeId(0, 3),
                                                   EdgeId(1, 2)},
                               4)
                  .has_value());
  // repeated edge
  CHECK_FALSE(Tour::from_edges(std::vector<EdgeId>{EdgeId(0, 1), EdgeId(0, 1), EdgeId(1, 2)}, 3)
                  .has_value());
}

TEST_CASE("ExchangePair validates and sorts its sides") {
  ExchangePair p({EdgeId(2, 3), EdgeId(0, 1)}, {EdgeId(1, 3), EdgeId(0, 2)});
  CHECK(p.removed() == std::vector<EdgeId>{EdgeId(0, 1), EdgeId(2, 3)});
  CHECK(p.added() == std::vector<EdgeId>{EdgeId(0, 2), EdgeId(1, 3)});
  CHECK(p.size() == 2);

  CHECK_THROWS_AS(ExchangePair({EdgeId(0, 1)}, {EdgeId(0, 2), EdgeId(1, 3)}), InvalidExchange);
  CHECK_THROWS_AS(ExchangePair({}, {}), InvalidExchange);
  CHECK_THROWS_AS(ExchangePair({EdgeId(0, 1), EdgeId(1, 0)}, {EdgeId(0, 2), EdgeId(1, 3)}),
                  InvalidExchange);
  CHECK_THROWS_AS(ExchangePair({EdgeId(0, 1), EdgeId(2, 3)}, {EdgeId(0, 1), EdgeId(1, 3)}),
                  InvalidExchange);
}

TEST_CASE("apply_exchange performs valid moves and rejects the rest") {
  Tour square({0, 1, 2, 3});
  ExchangePair flip({EdgeId(0, 1), EdgeId(2, 3)}, {EdgeId(0, 2), EdgeId(1, 3)});
  Tour crossed = apply_exchange(square, flip);
  CHECK(crossed.order() == std::vector<int>{0, 2, 1, 3});

  // the reverse pair undoes the move
  ExchangePair back({EdgeId(0, 2), EdgeId(1, 3)}, {EdgeId(0, 1), EdgeId(2, 3)});
  CHECK(apply_exchange(crossed, back).same_cycle(square));

  // removed edge not in the tour
  CHECK_THROWS_AS(apply_exchange(square, ExchangePair({EdgeId(0, 2), EdgeId(1, 3)},
                                                      {EdgeId(0, 1), EdgeId(2, 3)})),
                  InvalidExchange);
  // added edge already in the tour
  CHECK_THROWS_AS(apply_exchange(square, ExchangePair({EdgeId(0, 1), EdgeId(2, 3)},
                                                      {EdgeId(1, 2), EdgeId(0, 3)})),
                  InvalidExchange);
  // valid sides, but the result splits into two 3-cycles
  Tour hex({0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(apply_exchange(hex, ExchangePair({EdgeId(2, 3), EdgeId(0, 5)},
                                                   {EdgeId(0, 2), EdgeId(3, 5)})),
                  InvalidExchange);
  // size 1 is outside the tour family
  CHECK_THROWS_AS(apply_exchange(square, ExchangePair({EdgeId(0, 1)}, {EdgeId(0, 2)})),
                  InvalidExchange);
}
