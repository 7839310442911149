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

#include "kbest/instance.hpp"

#include <random>
#include <sstream>
#include <string>

#include "kbest/errors.hpp"

namespace kbest {

WeightedInstance::WeightedInstance(int n) : n_(n) {
  if (n < 2) {
    throw InvalidParameter("instance needs at least 2 vertices, got " + std::to_string(n));
  }
  std::size_t cells = static_cast<std::size_t>(n) * n;
  present_.assign(cells, 0);
  artificial_.assign(cells, 0);
  weight_.assign(cells, Weight{});
}

void WeightedInstance::add_edge(EdgeId e, Weight w, bool artificial) {
  if (e.u == e.v) {
    throw SelfLoop("self-loop at vertex " + std::to_string(e.u));
  }
  if (e.u < 0 || e.v >= n_) {
    throw VertexOutOfRange("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") outside 0.." + std::to_string(n_ - 1));
  }
  std::size_t i = index(e);
  if (present_[i]) {
    throw DuplicateEdge("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ")");
  }
  present_[i] = 1;
  artificial_[i] = artificial ? 1 : 0;
  weight_[i] = w;
  ++edge_count_;
}

bool WeightedInstance::has_edge(EdgeId e) const {
  if (e.u < 0 || e.v >= n_ || e.u == e.v) return false;
  return present_[index(e)] != 0;
}

Weight WeightedInstance::weight_of(EdgeId e) const {
  if (!has_edge(e)) {
    throw UnknownEdge("no edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  return weight_[index(e)];
}

bool WeightedInstance::is_artificial(EdgeId e) const {
  if (!has_edge(e)) {
    throw UnknownEdge("no edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  return artificial_[index(e)] != 0;
}

std::vector<EdgeId> WeightedInstance::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      EdgeId e(u, v);
      if (present_[index(e)]) out.push_back(e);
    }
  }
  return out;
}

std::vector<EdgeId> WeightedInstance::artificial_edges() const {
  std::vector<EdgeId> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      EdgeId e(u, v);
      if (present_[index(e)] && artificial_[index(e)]) out.push_back(e);
    }
  }
  return out;
}

Weight WeightedInstance::solution_weight(std::span<const EdgeId> edge_set) const {
  Weight sum;
  for (const EdgeId& e : edge_set) sum += weight_of(e);
  return sum;
}

bool WeightedInstance::uses_artificial(std::span<const EdgeId> edge_set) const {
  for (const EdgeId& e : edge_set) {
    if (is_artificial(e)) return true;
  }
  return false;
}

bool WeightedInstance::operator==(const WeightedInstance& other) const {
  return n_ == other.n_ && present_ == other.present_ && artificial_ == other.artificial_ &&
         weight_ == other.weight_;
}

namespace {

// Splits on spaces/tabs; no escaping in this format.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  std::size_t pos = 0;
  int value;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("malformed ") + what + ": '" + tok + "'", line_no);
  }
  if (pos != tok.size()) {
    throw ParseError(std::string("malformed ") + what + ": '" + tok + "'", line_no);
  }
  return value;
}

}  // namespace

WeightedInstance parse_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_n = false;
  WeightedInstance inst(2);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "n") {
      if (have_n) throw ParseError("repeated n line", line_no);
      if (toks.size() != 2) throw ParseError("expected 'n <count>'", line_no);
      int n = parse_int(toks[1], line_no, "vertex count");
      if (n < 2) throw ParseError("vertex count must be at least 2", line_no);
      inst = WeightedInstance(n);
      have_n = true;
    } else if (toks[0] == "e") {
      if (!have_n) throw ParseError("edge before n line", line_no);
      if (toks.size() != 4) throw ParseError("expected 'e <u> <v> <weight>'", line_no);
      int u = parse_int(toks[1], line_no, "vertex");
      int v = parse_int(toks[2], line_no, "vertex");
      Weight w;
      try {
        w = Weight::parse(toks[3]);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
      try {
        inst.add_edge(EdgeId(u, v), w);
      } catch (const SelfLoop& e) {
        throw SelfLoop(e.what(), line_no);
      } catch (const VertexOutOfRange& e) {
        throw VertexOutOfRange(e.what(), line_no);
      } catch (const DuplicateEdge& e) {
        throw DuplicateEdge(e.what(), line_no);
      }
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", line_no);
    }
  }
  if (!have_n) throw ParseError("missing n line");
  return inst;
}

WeightedInstance parse_instance(std::string_view text) {
  std::istringstream ss{std::string(text)};
  return parse_instance(ss);
}

std::string serialize_instance(const WeightedInstance& inst) {
  std::string out = "n " + std::to_string(inst.vertex_count()) + "\n";
  for (const EdgeId& e : inst.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           inst.weight_of(e).to_decimal_string() + "\n";
  }
  return out;
}

EmbedResult embed_complete(const WeightedInstance& inst, Objective objective) {
  Weight sum_abs;
  for (const EdgeId& e : inst.edges()) sum_abs += inst.weight_of(e).abs();
  Weight big_m = sum_abs + Weight::from_units(1);
  big_m.times(inst.vertex_count());  // fail now if tour sums could overflow
  Weight fill = objective == Objective::kMin ? big_m : -big_m;

  int n = inst.vertex_count();
  WeightedInstance full(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      EdgeId e(u, v);
      if (inst.has_edge(e)) {
        full.add_edge(e, inst.weight_of(e), inst.is_artificial(e));
      } else {
        full.add_edge(e, fill, true);
      }
    }
  }
  return EmbedResult{std::move(full), big_m};
}

namespace {

// Unbiased draw from [0, range) via threshold rejection; mt19937_64's output
// sequence is pinned by the standard, so results are portable.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t range) {
  std::uint64_t threshold = (0 - range) % range;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % range;
  }
}

}  // namespace

WeightedInstance random_instance(int n, Weight wmin, Weight wmax, std::uint64_t seed,
                                 double density) {
  if (n < 3) throw InvalidParameter("random_instance needs n >= 3");
  if (wmax < wmin) throw InvalidParameter("wmin must not exceed wmax");
  if (!(density > 0.0) || density > 1.0) {
    throw InvalidParameter("density must be in (0, 1]");
  }
  // round the unit range inward so only whole-unit weights are drawn
  std::int64_t lo = wmin.raw() >= 0 ? (wmin.raw() + Weight::kScale - 1) / Weight::kScale
                                    : wmin.raw() / Weight::kScale;
  std::int64_t hi = wmax.raw() >= 0 ? wmax.raw() / Weight::kScale
                                    : (wmax.raw() - Weight::kScale + 1) / Weight::kScale;
  if (lo > hi) throw InvalidParameter("no whole-unit weight in [wmin, wmax]");
  std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;

  std::mt19937_64 rng(seed);
  WeightedInstance inst(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (density < 1.0) {
        // 53-bit mantissa draw in [0,1)
        double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (coin >= density) continue;
      }
      std::int64_t units = lo + static_cast<std::int64_t>(draw_below(rng, range));
      inst.add_edge(EdgeId(u, v), Weight::from_units(units));
    }
  }
  return inst;
}

}  // namespace kbest
