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

#ifndef KBEST_WEIGHT_HPP
#define KBEST_WEIGHT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kbest {

/// Exact signed edge weight.
///
/// Stored as a 64-bit integer scaled by 10^6, so decimal inputs with up to
/// six fractional digits are represented exactly and all sums stay exact.
/// Arithmetic is checked: leaving the representable range throws
/// WeightOverflow, never wraps.
class Weight {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Weight() : raw_(0) {}

  static Weight from_raw(std::int64_t raw) { return Weight(raw); }

  /// whole_units * 10^6, checked.
  static Weight from_units(std::int64_t units);

  /// Parses an optionally signed decimal with at most six fractional digits.
  /// Throws ParseError on malformed text, WeightOverflow if out of range.
  static Weight parse(std::string_view text);

  std::int64_t raw() const { return raw_; }

  /// Exact decimal rendering; trailing fractional zeros trimmed ("30",
  /// "1.25", "-0.000001").
  std::string to_decimal_string() const;

  Weight operator+(Weight o) const;
  Weight operator-(Weight o) const;
  Weight operator-() const;
  Weight& operator+=(Weight o) { return *this = *this + o; }
  Weight& operator-=(Weight o) { return *this = *this - o; }

  /// |w|, checked (the minimum raw value has no representable negation).
  Weight abs() const;

  /// this * n, checked.
  Weight times(std::int64_t n) const;

  friend auto operator<=>(Weight a, Weight b) = default;

 private:
  explicit constexpr Weight(std::int64_t raw) : raw_(raw) {}

  std::int64_t raw_;
};

}  // namespace kbest

#endif  // KBEST_WEIGHT_HPP
