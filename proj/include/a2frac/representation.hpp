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

#ifndef A2FRAC_REPRESENTATION_HPP
#define A2FRAC_REPRESENTATION_HPP

#include <optional>
#include <string>

#include "a2frac/continuant.hpp"
#include "a2frac/digit.hpp"

namespace a2frac {

// First digit of the canonical expansion of x in [1/2, 1].
// The partition is [1/2, 2/3] -> 1 and (2/3, 1] -> 1/2; the boundary 2/3 maps
// to digit 1, which makes encode() produce canonical expansions everywhere
// (2/3 = [1;(1;1/2)] starts with digit 1).
Digit digit_of(const Rational& x);

// x -> 1/x - a_1(x); drops the first digit of the expansion. Exact.
Rational shift(const Rational& x);

// First `depth` canonical digits of x, by iterated digit_of/shift.
DigitWord encode(const Rational& x, int depth);

// Convenience wrapper for binary doubles. The shift expands float error by up
// to a factor of 4 per step, so depth is capped at 40; use the exact overload
// for anything deeper.
DigitWord encode(double x, int depth);

// A digit word with an optional periodic tail: preamble then period repeated
// forever. An empty period means a plain finite word. The period is reduced
// to its primitive (minimal) block on construction.
struct EventuallyPeriodicWord {
  DigitWord preamble;
  DigitWord period;

  EventuallyPeriodicWord() = default;
  EventuallyPeriodicWord(DigitWord pre, DigitWord per);

  bool finite() const { return period.empty(); }
  // Digit at 0-based position i of the infinite word; i must be within the
  // preamble when the word is finite.
  Digit at(std::size_t i) const;
  // First n digits of the infinite word.
  DigitWord prefix(std::size_t n) const;

  bool operator==(const EventuallyPeriodicWord& other) const = default;
};

// Grammar: word := digit* ( "(" digit+ ")" )? over {"1","h"}.
// "1h(1h)" means [1; 1/2; (1; 1/2)].
std::string format_periodic_word(const EventuallyPeriodicWord& word);
EventuallyPeriodicWord parse_periodic_word(const std::string& text);

// Value of a (possibly eventually periodic) word. The periodic tail is the
// fixed point of a Mobius map with rational coefficients, so the value is a
// root of a quadratic with rational coefficients; `exact` is set when that
// root is rational, and the quadratic a x^2 + b x + c = 0 is always reported
// for irrational values.
struct DecodedValue {
  std::optional<Rational> exact;
  double approx = 0.0;
  // Quadratic satisfied by the value when it is irrational (a != 0).
  Rational quad_a, quad_b, quad_c;

  bool is_exact() const { return exact.has_value(); }
};

DecodedValue decode(const EventuallyPeriodicWord& word);

// Rewrites the forbidden tail ...; b; 1/2; (1/2; 1) into ...; b; 1; (1; 1/2)
// (the two sides denote the same number) and normalizes the preamble/period
// split, so equal infinite words compare equal. Value-preserving, idempotent.
EventuallyPeriodicWord canonicalize(const EventuallyPeriodicWord& word);

// Pattern test: the tail is eventually the alternating period (1; 1/2) or
// (1/2; 1), i.e. the decoded point has two distinct representations.
bool is_a2_binary(const EventuallyPeriodicWord& word);

}  // namespace a2frac

#endif  // A2FRAC_REPRESENTATION_HPP
