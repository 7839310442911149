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

#include "kbest/weight.hpp"

#include <cctype>
#include <cstdlib>

#include "kbest/errors.hpp"

namespace kbest {

Weight Weight::from_units(std::int64_t units) {
  std::int64_t raw;
  if (__builtin_mul_overflow(units, kScale, &raw)) {
    throw WeightOverflow("weight out of range: " + std::to_string(units));
  }
  return Weight(raw);
}

Weight Weight::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::size_t digits_start = i;
  std::int64_t units = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    int d = text[i] - '0';
    if (__builtin_mul_overflow(units, std::int64_t{10}, &units) ||
        __builtin_add_overflow(units, std::int64_t{d}, &units)) {
      throw WeightOverflow("weight out of range: " + std::string(text));
    }
    ++i;
  }
  if (i == digits_start) {
    throw ParseError("malformed weight: '" + std::string(text) + "'");
  }
  std::int64_t frac = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      frac = frac * 10 + (text[i] - '0');
      ++i;
    }
    std::size_t frac_digits = i - frac_start;
    if (frac_digits == 0 || frac_digits > 6) {
      throw ParseError("malformed weight: '" + std::string(text) + "'");
    }
    for (std::size_t k = frac_digits; k < 6; ++k) frac *= 10;
  }
  if (i != text.size()) {
    throw ParseError("malformed weight: '" + std::string(text) + "'");
  }
  std::int64_t raw;
  if (__builtin_mul_overflow(units, kScale, &raw) || __builtin_add_overflow(raw, frac, &raw)) {
    throw WeightOverflow("weight out of range: " + std::string(text));
  }
  return negative ? -Weight(raw) : Weight(raw);
}

std::string Weight::to_decimal_string() const {
  std::int64_t r = raw_;
  std::string sign;
  // avoid negating INT64_MIN; fold the sign into the division pieces
  std::int64_t units = r / kScale;
  std::int64_t frac = r % kScale;
  if (r < 0) {
    sign = "-";
    units = -units;
    frac = -frac;
  }
  std::string out = sign + std::to_string(units);
  if (frac != 0) {
    std::string f = std::to_string(frac);
    f.insert(f.begin(), 6 - f.size(), '0');
    while (f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

Weight Weight::operator+(Weight o) const {
  std::int64_t r;
  if (__builtin_add_overflow(raw_, o.raw_, &r)) {
    throw WeightOverflow("weight addition overflow");
  }
  return Weight(r);
}

Weight Weight::operator-(Weight o) const {
  std::int64_t r;
  if (__builtin_sub_overflow(raw_, o.raw_, &r)) {
    throw WeightOverflow("weight subtraction overflow");
  }
  return Weight(r);
}

Weight Weight::operator-() const {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, raw_, &r)) {
    throw WeightOverflow("weight negation overflow");
  }
  return Weight(r);
}

Weight Weight::abs() const { return raw_ < 0 ? -*this : *this; }

Weight Weight::times(std::int64_t n) const {
  std::int64_t r;
  if (__builtin_mul_overflow(raw_, n, &r)) {
    throw WeightOverflow("weight multiplication overflow");
  }
  return Weight(r);
}

}  // namespace kbest
