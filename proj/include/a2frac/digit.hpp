// Copyright 2026 The a2frac Authors
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

#ifndef A2FRAC_DIGIT_HPP
#define A2FRAC_DIGIT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "a2frac/errors.hpp"
#include "a2frac/rational.hpp"

namespace a2frac {

// Partial quotients come from the two-symbol alphabet {1/2, 1}.
enum class Digit : std::uint8_t { One = 0, Half = 1 };

using DigitWord = std::vector<Digit>;

inline Rational digit_value(Digit d) {
  return d == Digit::One ? Rational(1) : Rational(1, 2);
}

inline double digit_value_double(Digit d) { return d == Digit::One ? 1.0 : 0.5; }

inline char digit_char(Digit d) { return d == Digit::One ? '1' : 'h'; }

inline Digit digit_from_char(char c) {
  if (c == '1') return Digit::One;
  if (c == 'h') return Digit::Half;
  throw ParseError(std::string("invalid digit character '") + c + "'");
}

// Serialization over {"1","h"}: "1h1h" = (1, 1/2, 1, 1/2).
std::string format_word(const DigitWord& word);
DigitWord parse_word(const std::string& text);

}  // namespace a2frac

#endif  // A2FRAC_DIGIT_HPP
