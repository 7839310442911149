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

// kbest: rank Hamilton cycles or spanning trees of a weighted graph,
// best first, by exchange-based enumeration, with a brute-force oracle for
// cross-checking at small sizes.
//
// Exit codes: 0 success, 1 usage or unreadable/unwritable path, 2 instance
// parse or content error (including incomplete without --allow-incomplete),
// 3 size limit exceeded, 4 pool/oracle mismatch in compare, 5 internal error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "kbest/compare.hpp"
#include "kbest/engines.hpp"
#include "kbest/errors.hpp"
#include "kbest/exchange_system.hpp"
#include "kbest/json_io.hpp"
#include "kbest/oracles.hpp"

namespace {

using namespace kbest;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  int k = 1;
  std::string engine = "pool";
  std::string objective = "min";
  bool trees = false;
  bool allow_incomplete = false;
  std::string json_path;
  int n = 10;
  std::uint64_t seed = 1;
  std::string weight_min = "1";
  std::string weight_max = "100";
  double density = 1.0;
  int k_max = 1000;
  int step = 100;
};

Objective parse_objective(const std::string& s) {
  return s == "max" ? Objective::kMax : Objective::kMin;
}

/// A malformed weight on the command line is a usage error, not an instance
/// content error, so remap before the generic handlers see it.
Weight parse_weight_flag(const std::string& text, const char* flag) {
  try {
    return Weight::parse(text);
  } catch (const ParseError&) {
    throw InvalidParameter(std::string(flag) + " is not a decimal weight: " + text);
  }
}

WeightedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  return parse_instance(in);
}

/// Tours need a complete instance; embed when allowed, reject otherwise.
WeightedInstance complete_for_tours(WeightedInstance inst, Objective objective,
                                    bool allow_incomplete) {
  if (inst.is_complete()) return inst;
  if (!allow_incomplete) {
    throw IncompleteInstance("instance is incomplete; pass --allow-incomplete to embed");
  }
  return embed_complete(inst, objective).instance;
}

void emit(const std::string& text, const std::string& json_path) {
  if (json_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(json_path, std::ios::binary);
  if (!out) throw FileError("cannot write " + json_path);
  out << text;
}

int cmd_solve(const Options& o) {
  Objective obj = parse_objective(o.objective);
  WeightedInstance inst = load_instance(o.input);
  Json doc;
  if (o.trees) {
    TreeSystem sys(std::move(inst), obj);
    EngineStats stats;
    RankedList<SpanningTree> list =
        o.engine == "pool" ? kbest_pool(sys, o.k, stats) : kbest_greedy(sys, o.k, stats);
    doc = result_json(o.engine, list, stats);
  } else {
    TourSystem sys(complete_for_tours(std::move(inst), obj, o.allow_incomplete), obj);
    EngineStats stats;
    RankedList<Tour> list =
        o.engine == "pool" ? kbest_pool(sys, o.k, stats) : kbest_greedy(sys, o.k, stats);
    doc = result_json(o.engine, list, stats);
  }
  emit(dump_json(doc), o.json_path);
  return 0;
}

int cmd_oracle(const Options& o) {
  Objective obj = parse_objective(o.objective);
  WeightedInstance inst = load_instance(o.input);
  EngineStats stats;
  auto start = std::chrono::steady_clock::now();
  Json doc;
  if (o.trees) {
    RankedList<SpanningTree> list = brute_force_kbest_trees(inst, o.k, obj);
    stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    doc = result_json("oracle", list, stats);
  } else {
    if (o.allow_incomplete) inst = complete_for_tours(std::move(inst), obj, true);
    RankedList<Tour> list = brute_force_kbest_tours(inst, o.k, obj);
    stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    doc = result_json("oracle", list, stats);
  }
  emit(dump_json(doc), o.json_path);
  return 0;
}

int cmd_compare(const Options& o) {
  Objective obj = parse_objective(o.objective);
  WeightedInstance inst = load_instance(o.input);
  std::string counterexample_path =
      o.json_path.empty() ? "counterexample.json" : o.json_path + ".counterexample.json";
  if (o.trees) {
    EngineComparison<SpanningTree> cmp = compare_tree_engines(inst, o.k, obj);
    emit(dump_json(comparison_json(cmp)), o.json_path);
    if (!cmp.pool_vs_oracle.match()) {
      Json ce = counterexample_json(inst, "pool",
                                    result_json("oracle", cmp.oracle, cmp.oracle_stats),
                                    result_json("pool", cmp.pool, cmp.pool_stats),
                                    cmp.pool_vs_oracle);
      emit(dump_json(ce), counterexample_path);
      std::cerr << "pool/oracle mismatch; counterexample written to " << counterexample_path
                << "\n";
      return 4;
    }
  } else {
    WeightedInstance complete = complete_for_tours(inst, obj, o.allow_incomplete);
    EngineComparison<Tour> cmp = compare_tour_engines(complete, o.k, obj);
    emit(dump_json(comparison_json(cmp)), o.json_path);
    if (!cmp.pool_vs_oracle.match()) {
      Json ce = counterexample_json(complete, "pool",
                                    result_json("oracle", cmp.oracle, cmp.oracle_stats),
                                    result_json("pool", cmp.pool, cmp.pool_stats),
                                    cmp.pool_vs_oracle);
      emit(dump_json(ce), counterexample_path);
      std::cerr << "pool/oracle mismatch; counterexample written to " << counterexample_path
                << "\n";
      return 4;
    }
  }
  return 0;
}

int cmd_gen(const Options& o) {
  WeightedInstance inst = random_instance(o.n, parse_weight_flag(o.weight_min, "--weight-min"),
                                          parse_weight_flag(o.weight_max, "--weight-max"),
                                          o.seed, o.density);
  std::cout << serialize_instance(inst);
  return 0;
}

template <typename System>
void bench_rows(System& sys, const Options& o) {
  for (int k = 1; k <= o.k_max; k += o.step) {
    EngineStats stats;
    if (o.engine == "pool") {
      kbest_pool(sys, k, stats);
    } else {
      kbest_greedy(sys, k, stats);
    }
    std::cout << o.n << ',' << k << ',' << o.engine << ',' << stats.elapsed_ms() << ','
              << stats.pool_size_max << ',' << stats.neighborhoods_expanded << '\n';
  }
}

int cmd_bench(const Options& o) {
  Objective obj = parse_objective(o.objective);
  WeightedInstance inst = random_instance(o.n, parse_weight_flag(o.weight_min, "--weight-min"),
                                          parse_weight_flag(o.weight_max, "--weight-max"),
                                          o.seed, o.density);
  std::cout << "n,k,engine,elapsed_ms,pool_size_max,neighborhoods_expanded\n";
  if (o.trees) {
    TreeSystem sys(std::move(inst), obj);
    bench_rows(sys, o);
  } else {
    // benchmarking is measurement, embed without ceremony
    TourSystem sys(complete_for_tours(std::move(inst), obj, true), obj);
    bench_rows(sys, o);
  }
  return 0;
}

void add_io_options(CLI::App* cmd, Options& o, bool with_engine) {
  cmd->add_option("--input", o.input, "instance file")->required();
  cmd->add_option("--k", o.k, "how many solutions to rank")->check(CLI::PositiveNumber);
  if (with_engine) {
    cmd->add_option("--engine", o.engine, "ranking engine")
        ->check(CLI::IsMember({"pool", "greedy"}));
  }
  cmd->add_option("--objective", o.objective, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  cmd->add_flag("--trees", o.trees, "rank spanning trees instead of tours");
  cmd->add_flag("--allow-incomplete", o.allow_incomplete,
                "embed incomplete instances over artificial edges (tours)");
  cmd->add_option("--json", o.json_path, "write the JSON artifact here instead of stdout");
}

void add_gen_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "vertex count")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--weight-min", o.weight_min, "least edge weight");
  cmd->add_option("--weight-max", o.weight_max, "greatest edge weight");
  cmd->add_option("--density", o.density, "edge keep probability in (0,1]");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"K-best Hamilton cycles and spanning trees by edge exchanges"};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "rank solutions with an engine");
  add_io_options(solve, o, true);

  CLI::App* oracle = app.add_subcommand("oracle", "rank solutions by brute force");
  add_io_options(oracle, o, false);

  CLI::App* compare = app.add_subcommand("compare", "run engines against the oracle");
  add_io_options(compare, o, false);

  CLI::App* gen = app.add_subcommand("gen", "emit a deterministic random instance");
  add_gen_options(gen, o);

  CLI::App* bench = app.add_subcommand("bench", "time an engine across a K sweep (CSV)");
  add_gen_options(bench, o);
  bench->get_option("--n")->required(false);
  bench->add_option("--engine", o.engine, "ranking engine")
      ->check(CLI::IsMember({"pool", "greedy"}));
  bench->add_option("--objective", o.objective, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  bench->add_flag("--trees", o.trees, "rank spanning trees instead of tours");
  bench->add_option("--k-max", o.k_max, "largest K")->check(CLI::PositiveNumber);
  bench->add_option("--step", o.step, "K increment between rows")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (compare->parsed()) return cmd_compare(o);
    if (gen->parsed()) return cmd_gen(o);
    if (bench->parsed()) return cmd_bench(o);
    return 1;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IncompleteInstance& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DisconnectedGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const WeightOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
}
