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

#include "kbest/json_io.hpp"

namespace kbest {

namespace {

Json solution_field(const Tour& t) { return Json(t.order()); }

Json solution_field(const SpanningTree& t) {
  Json edges = Json::array();
  for (const EdgeId& e : t.edges()) edges.push_back(Json::array({e.u, e.v}));
  return edges;
}

const char* solution_key(const Tour&) { return "tour"; }
const char* solution_key(const SpanningTree&) { return "tree"; }

template <typename S>
Json result_json_impl(std::string_view engine, const RankedList<S>& list,
                      const EngineStats& stats) {
  Json j;
  j["engine"] = std::string(engine);
  j["objective"] = list.objective == Objective::kMin ? "min" : "max";
  j["k_requested"] = list.k_requested;
  j["k_returned"] = static_cast<int>(list.entries.size());
  j["exhausted"] = list.exhausted;
  Json solutions = Json::array();
  for (const RankedEntry<S>& e : list.entries) {
    Json entry;
    entry["rank"] = e.rank;
    entry["weight"] = e.weight.to_decimal_string();
    entry[solution_key(e.solution)] = solution_field(e.solution);
    entry["uses_artificial"] = e.uses_artificial;
    solutions.push_back(std::move(entry));
  }
  j["solutions"] = std::move(solutions);
  Json st;
  st["pool_size_max"] = stats.pool_size_max;
  st["neighborhoods_expanded"] = stats.neighborhoods_expanded;
  st["exchanges_evaluated"] = stats.exchanges_evaluated;
  st["elapsed_ms"] = stats.elapsed_ms();
  j["stats"] = std::move(st);
  return j;
}

}  // namespace

Json result_json(std::string_view engine, const RankedList<Tour>& list,
                 const EngineStats& stats) {
  return result_json_impl(engine, list, stats);
}

Json result_json(std::string_view engine, const RankedList<SpanningTree>& list,
                 const EngineStats& stats) {
  return result_json_impl(engine, list, stats);
}

Json divergence_json(const RankDivergence& d) {
  Json j;
  j["match"] = d.match();
  j["weights_match"] = d.weights_match;
  j["solutions_match"] = d.solutions_match;
  j["first_weight_divergence"] = d.first_weight_divergence;
  j["first_solution_divergence"] = d.first_solution_divergence;
  return j;
}

Json comparison_json(const EngineComparison<Tour>& cmp) {
  Json j;
  j["family"] = "tours";
  j["objective"] = cmp.oracle.objective == Objective::kMin ? "min" : "max";
  j["k"] = cmp.oracle.k_requested;
  j["oracle"] = result_json("oracle", cmp.oracle, cmp.oracle_stats);
  j["pool"] = result_json("pool", cmp.pool, cmp.pool_stats);
  j["greedy"] = result_json("greedy", cmp.greedy, cmp.greedy_stats);
  j["pool_vs_oracle"] = divergence_json(cmp.pool_vs_oracle);
  j["greedy_vs_oracle"] = divergence_json(cmp.greedy_vs_oracle);
  return j;
}

Json comparison_json(const EngineComparison<SpanningTree>& cmp) {
  Json j;
  j["family"] = "trees";
  j["objective"] = cmp.oracle.objective == Objective::kMin ? "min" : "max";
  j["k"] = cmp.oracle.k_requested;
  j["oracle"] = result_json("oracle", cmp.oracle, cmp.oracle_stats);
  j["pool"] = result_json("pool", cmp.pool, cmp.pool_stats);
  j["greedy"] = result_json("greedy", cmp.greedy, cmp.greedy_stats);
  j["pool_vs_oracle"] = divergence_json(cmp.pool_vs_oracle);
  j["greedy_vs_oracle"] = divergence_json(cmp.greedy_vs_oracle);
  return j;
}

Json counterexample_json(const WeightedInstance& inst, std::string_view engine,
                         const Json& expected, const Json& actual,
                         const RankDivergence& d) {
  Json j;
  j["engine"] = std::string(engine);
  j["instance"] = serialize_instance(inst);
  j["divergence"] = divergence_json(d);
  j["expected"] = expected;
  j["actual"] = actual;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kbest
