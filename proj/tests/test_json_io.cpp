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

#include <string>

#include "doctest.h"
#include "kbest/json_io.hpp"

using namespace kbest;

TEST_CASE("result documents freeze the full output contract") {
  RankedList<Tour> list{Objective::kMin, 3, true, {}};
  list.entries.push_back({1, Tour({0, 2, 1, 3}), Weight::parse("30"), false});
  list.entries.push_back({2, Tour({0, 1, 2, 3}), Weight::parse("45.5"), true});
  EngineStats stats;

  // byte-for-byte: key order, decimal weights, 2-space indent, final newline
  CHECK(dump_json(result_json("pool", list, stats)) == R"({
  "engine": "pool",
  "objective": "min",
  "k_requested": 3,
  "k_returned": 2,
  "exhausted": true,
  "solutions": [
    {
      "rank": 1,
      "weight": "30",
      "tour": [
        0,
        2,
        1,
        3
      ],
      "uses_artificial": false
    },
    {
      "rank": 2,
      "weight": "45.5",
      "tour": [
        0,
        1,
        2,
        3
      ],
      "uses_artificial": true
    }
  ],
  "stats": {
    "pool_size_max": 0,
    "neighborhoods_expanded": 0,
    "exchanges_evaluated": 0,
    "elapsed_ms": 0
  }
}
)");
}

TEST_CASE("tree solutions serialize as edge pairs") {
  RankedList<SpanningTree> list{Objective::kMax, 1, false, {}};
  list.entries.push_back(
      {1, SpanningTree({EdgeId(0, 1), EdgeId(1, 2), EdgeId(1, 3)}, 4), Weight::parse("9"), false});
  EngineStats stats;
  Json j = result_json("oracle", list, stats);
  CHECK(j["objective"] == "max");
  CHECK(j["k_returned"] == 1);
  CHECK(j["solutions"][0]["tree"] == Json::parse("[[0,1],[1,2],[1,3]]"));
  CHECK_FALSE(j["solutions"][0].contains("tour"));
}

TEST_CASE("divergence documents mirror the verdict struct") {
  RankDivergence d;
  d.weights_match = false;
  d.first_weight_divergence = 4;
  Json j = divergence_json(d);
  CHECK(j["match"] == false);
  CHECK(j["weights_match"] == false);
  CHECK(j["solutions_match"] == true);
  CHECK(j["first_weight_divergence"] == 4);
  CHECK(j["first_solution_divergence"] == 0);
}

TEST_CASE("comparison documents carry every producer") {
  WeightedInstance g = random_instance(5, Weight::from_units(1), Weight::from_units(30), 9);
  Json j = comparison_json(compare_tour_engines(g, 4));
  CHECK(j["family"] == "tours");
  CHECK(j["k"] == 4);
  CHECK(j["oracle"]["engine"] == "oracle");
  CHECK(j["pool"]["engine"] == "pool");
  CHECK(j["greedy"]["engine"] == "greedy");
  CHECK(j["pool_vs_oracle"]["match"] == true);

  Json jt = comparison_json(compare_tree_engines(g, 4));
  CHECK(jt["family"] == "trees");
  CHECK(jt["oracle"]["solutions"][0].contains("tree"));
}

TEST_CASE("counterexample documents round-trip the instance") {
  WeightedInstance g(3);
  g.add_edge(EdgeId(0, 1), Weight::parse("1.5"));
  g.add_edge(EdgeId(0, 2), Weight::parse("2"));
  g.add_edge(EdgeId(1, 2), Weight::parse("3"));
  RankDivergence d;
  d.solutions_match = false;
  d.first_solution_divergence = 1;
  Json expected = Json{{"engine", "oracle"}};
  Json actual = Json{{"engine", "pool"}};
  Json j = counterexample_json(g, "pool", expected, actual, d);
  CHECK(j["engine"] == "pool");
  CHECK(j["divergence"]["first_solution_divergence"] == 1);
  CHECK(j["expected"]["engine"] == "oracle");
  CHECK(j["actual"]["engine"] == "pool");
  CHECK(parse_instance(j["instance"].get<std::string>()) == g);
}
