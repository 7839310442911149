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

#ifndef KBEST_JSON_IO_HPP
#define KBEST_JSON_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "kbest/compare.hpp"

namespace kbest {

/// Key order is part of the output contract, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

/// Result document:
///   { engine, objective, k_requested, k_returned, exhausted,
///     solutions: [ { rank, weight, tour|tree, uses_artificial } ], stats }
/// Weights are exact decimal strings; tours are vertex orders, trees are
/// [u, v] pairs; stats.elapsed_ms is whole milliseconds.
Json result_json(std::string_view engine, const RankedList<Tour>& list,
                 const EngineStats& stats);
Json result_json(std::string_view engine, const RankedList<SpanningTree>& list,
                 const EngineStats& stats);

Json divergence_json(const RankDivergence& d);

/// Comparison document: family, objective, k, one result document per
/// producer, and both verdicts against the oracle.
Json comparison_json(const EngineComparison<Tour>& cmp);
Json comparison_json(const EngineComparison<SpanningTree>& cmp);

/// Counterexample document: the instance text, the divergence, and the
/// disagreeing pair of result documents.
Json counterexample_json(const WeightedInstance& inst, std::string_view engine,
                         const Json& expected, const Json& actual,
                         const RankDivergence& d);

/// Two-space indented dump with a trailing newline; the one place that fixes
/// JSON formatting, so equal documents are equal bytes.
std::string dump_json(const Json& j);

}  // namespace kbest

#endif  // KBEST_JSON_IO_HPP
