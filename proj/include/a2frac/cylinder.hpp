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

#ifndef A2FRAC_CYLINDER_HPP
#define A2FRAC_CYLINDER_HPP

#include <iosfwd>
#include <string>

#include "a2frac/continuant.hpp"
#include "a2frac/digit.hpp"
#include "a2frac/rational.hpp"

namespace a2frac {

// Closed interval of all numbers whose expansion starts with `word`:
// endpoints are the values of [a_1;...;a_n; t] at t = 1/2 and t = 1, i.e.
// (p_n + p_{n-1}/2)/(q_n + q_{n-1}/2) and (p_n + p_{n-1})/(q_n + q_{n-1}),
// stored sorted ascending.
struct Cylinder {
  DigitWord word;
  Rational left;
  Rational right;

  Rational length() const { return right - left; }
};

// Throws EmptyWord for level 0.
Cylinder cylinder(const DigitWord& word);

// Exact length 1/((q_{n-1} + q_n)(q_{n-1} + 2 q_n)), computed directly from
// the continuants.
Rational cylinder_length(const DigitWord& word);

// ln of the cylinder length, stable at depths where the value itself
// underflows a double (n around 500 and up).
double log_cylinder_length(const ContinuantState& state);

// Level-n cylinder containing x under canonical encoding.
Cylinder locate(const Rational& x, int n);

// Verifies that the 2^n level-n cylinders tile [1/2, 1]: consecutive
// cylinders touch exactly at their shared endpoint and the exact lengths sum
// to 1/2. Levels above `cap` throw CapExceeded (2^n cylinders get enumerated).
bool partition_check(int n, int cap = 20);

// CSV rows `level,word,left,right,length` with rationals as "num/den".
void emit_cylinder_csv(std::ostream& out, const Cylinder& cyl, bool header = false);

}  // namespace a2frac

#endif  // A2FRAC_CYLINDER_HPP
