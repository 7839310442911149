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

// End-to-end checks of the kbest binary named by $KBEST_CLI (the ctest
// harness sets it). Runs through the shell, so output and exit codes are
// exercised exactly as a user sees them.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
  int code;
  std::string out;
};

std::string cli() {
  const char* path = std::getenv("KBEST_CLI");
  REQUIRE_MESSAGE(path != nullptr, "KBEST_CLI must point at the kbest binary");
  return path;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = cli() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), std::move(out)};
}

std::string temp_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/kbest_cli_XXXXXX";
    char* made = mkdtemp(tmpl);
    REQUIRE(made != nullptr);
    return std::string(made);
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  std::string path = temp_dir() + "/" + name;
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
  return path;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kPow2K4 =
    "n 4\n"
    "e 0 1 1\n"
    "e 0 2 2\n"
    "e 0 3 4\n"
    "e 1 2 8\n"
    "e 1 3 16\n"
    "e 2 3 32\n";

const char* kCycle5 =
    "n 5\n"
    "e 0 1 1\n"
    "e 0 4 1\n"
    "e 1 2 1\n"
    "e 2 3 1\n"
    "e 3 4 1\n";

}  // namespace

TEST_CASE("solve ranks the whole K4 family") {
  std::string inst = write_file("k4.txt", kPow2K4);
  RunResult r = run("solve --input " + inst + " --k 5");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["engine"] == "pool");
  CHECK(j["objective"] == "min");
  CHECK(j["k_requested"] == 5);
  CHECK(j["k_returned"] == 3);
  CHECK(j["exhausted"] == true);
  CHECK(j["solutions"][0]["weight"] == "30");
  CHECK(j["solutions"][1]["weight"] == "45");
  CHECK(j["solutions"][2]["weight"] == "51");
  CHECK(j["solutions"][0]["tour"] == Json::parse("[0,2,1,3]"));

  RunResult greedy = run("solve --input " + inst + " --k 3 --engine greedy");
  REQUIRE(greedy.code == 0);
  Json jg = Json::parse(greedy.out);
  CHECK(jg["engine"] == "greedy");
  CHECK(jg["solutions"][2]["weight"] == "51");
}

TEST_CASE("solve handles the one-tour K3") {
  std::string inst = write_file("k3.txt", "n 3\ne 0 1 1\ne 0 2 2\ne 1 2 3\n");
  RunResult r = run("solve --input " + inst + " --k 1");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["k_returned"] == 1);
  CHECK(j["solutions"][0]["tour"] == Json::parse("[0,1,2]"));
  CHECK(j["solutions"][0]["weight"] == "6");
  CHECK(j["exhausted"] == false);  // k met before the pool could prove the end
}

TEST_CASE("solve --trees ranks spanning trees") {
  std::string inst = write_file("k4t.txt", kPow2K4);
  RunResult r = run("solve --input " + inst + " --trees --k 2");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["k_returned"] == 2);
  CHECK(j["solutions"][0]["weight"] == "7");
  CHECK(j["solutions"][0]["tree"] == Json::parse("[[0,1],[0,2],[0,3]]"));
}

TEST_CASE("incomplete instances need --allow-incomplete") {
  std::string inst = write_file("c5.txt", kCycle5);
  RunResult refused = run("solve --input " + inst + " --k 2", true);
  CHECK(refused.code == 2);
  CHECK(refused.out.find("--allow-incomplete") != std::string::npos);

  RunResult r = run("solve --input " + inst + " --k 2 --allow-incomplete");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["solutions"][0]["weight"] == "5");
  CHECK(j["solutions"][0]["uses_artificial"] == false);
  CHECK(j["solutions"][1]["weight"] == "15");
  CHECK(j["solutions"][1]["uses_artificial"] == true);
}

TEST_CASE("oracle exhausts small families") {
  RunResult gen = run("gen --n 5 --seed 3");
  REQUIRE(gen.code == 0);
  std::string inst = write_file("r5.txt", gen.out);
  RunResult r = run("oracle --input " + inst + " --k 20");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["engine"] == "oracle");
  CHECK(j["k_returned"] == 12);
  CHECK(j["exhausted"] == true);
}

TEST_CASE("size limits exit with code 3") {
  RunResult gen = run("gen --n 12 --seed 1");
  REQUIRE(gen.code == 0);
  std::string inst = write_file("r12.txt", gen.out);
  CHECK(run("oracle --input " + inst + " --k 2").code == 3);

  RunResult gen8 = run("gen --n 8 --seed 1");
  std::string inst8 = write_file("r8.txt", gen8.out);
  CHECK(run("oracle --input " + inst8 + " --k 2 --trees").code == 3);
}

TEST_CASE("content errors exit with code 2") {
  std::string selfloop = write_file("bad.txt", "n 3\ne 1 1 1\n");
  RunResult r = run("solve --input " + selfloop + " --k 1", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("line 2") != std::string::npos);

  std::string disconnected = write_file("disc.txt", "n 4\ne 0 1 1\ne 2 3 1\n");
  CHECK(run("solve --input " + disconnected + " --trees --k 1").code == 2);
}

TEST_CASE("usage errors exit with code 1") {
  std::string inst = write_file("k4u.txt", kPow2K4);
  CHECK(run("solve --input " + temp_dir() + "/no_such_file --k 1").code == 1);
  CHECK(run("solve --input " + inst + " --engine bogus").code == 1);
  CHECK(run("solve --input " + inst + " --k 0").code == 1);
  CHECK(run("").code == 1);  // a subcommand is required
  CHECK(run("gen --n 5 --weight-min nonsense").code == 1);
  CHECK(run("solve --input " + inst + " --k 1 --json /no/such/dir/out.json").code == 1);
}

TEST_CASE("gen and solve are byte-deterministic") {
  RunResult g1 = run("gen --n 7 --seed 9 --density 0.9");
  RunResult g2 = run("gen --n 7 --seed 9 --density 0.9");
  REQUIRE(g1.code == 0);
  CHECK(g1.out == g2.out);

  std::string inst = write_file("r7.txt", g1.out);
  std::string j1 = temp_dir() + "/a.json";
  std::string j2 = temp_dir() + "/b.json";
  std::string flags = " --k 6 --allow-incomplete --json ";
  REQUIRE(run("solve --input " + inst + flags + j1).code == 0);
  REQUIRE(run("solve --input " + inst + flags + j2).code == 0);
  CHECK(read_file(j1) == read_file(j2));
  CHECK(read_file(j1) == Json::parse(read_file(j1)).dump(2) + "\n");
}

TEST_CASE("compare agrees with the oracle end to end") {
  RunResult gen = run("gen --n 6 --seed 21");
  std::string inst = write_file("r6.txt", gen.out);
  RunResult tours = run("compare --input " + inst + " --k 10");
  REQUIRE(tours.code == 0);
  Json j = Json::parse(tours.out);
  CHECK(j["family"] == "tours");
  CHECK(j["pool_vs_oracle"]["match"] == true);

  RunResult trees = run("compare --input " + inst + " --k 10 --trees");
  REQUIRE(trees.code == 0);
  CHECK(Json::parse(trees.out)["family"] == "trees");
}

TEST_CASE("bench emits one CSV row per K") {
  RunResult r = run("bench --n 6 --seed 2 --k-max 21 --step 10");
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "n,k,engine,elapsed_ms,pool_size_max,neighborhoods_expanded");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("6,", 0) == 0);
    CHECK(line.find(",pool,") != std::string::npos);
    ++rows;
  }
  CHECK(rows == 3);  // k = 1, 11, 21

  RunResult trees = run("bench --n 6 --seed 2 --k-max 5 --step 2 --trees --engine greedy");
  REQUIRE(trees.code == 0);
  CHECK(trees.out.find(",greedy,") != std::string::npos);
}
