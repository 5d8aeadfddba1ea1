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

#include "a2frac/continuant.hpp"

#include <cmath>

#include "a2frac/errors.hpp"

namespace a2frac {

bool ContinuantState::ratio_in_unit_band() const {
  if (level_ < 1) throw NoPredecessor();
  // q_n/q_{n-1} = T_n / (2 T_{n-1}); the band [1, 2] becomes
  // 2 T_{n-1} <= T_n <= 4 T_{n-1}.
  return t_curr_ >= 2 * t_prev_ && t_curr_ <= 4 * t_prev_;
}

bool ContinuantState::ratio_in_envelope() const {
  if (level_ < 1) throw NoPredecessor();
  // [1/2, 3] becomes T_{n-1} <= T_n <= 6 T_{n-1}.
  return t_curr_ >= t_prev_ && t_curr_ <= 6 * t_prev_;
}

std::string format_word(const DigitWord& word) {
  std::string out;
  out.reserve(word.size());
  for (Digit d : word) out.push_back(digit_char(d));
  return out;
}

DigitWord parse_word(const std::string& text) {
  DigitWord word;
  word.reserve(text.size());
  for (char c : text) word.push_back(digit_from_char(c));
  return word;
}

ContinuantState run_word(const DigitWord& word) {
  ContinuantState state;
  for (Digit d : word) state.step(d);
  return state;
}

Rational convergent(const DigitWord& word) {
  if (word.empty()) throw EmptyWord();
  const ContinuantState state = run_word(word);
  // The 2^{n+1} scales cancel in the ratio.
  return Rational(state.s_curr(), state.t_curr());
}

bool check_determinant(const DigitWord& word) {
  if (word.empty()) throw EmptyWord();
  ContinuantState state;
  for (Digit d : word) {
    state.step(d);
    if (!state.determinant_ok()) return false;
  }
  return true;
}

double growth_bound(int n) {
  const double s = std::sqrt(17.0);
  return 2.0 / s * (std::pow((1.0 + s) / 4.0, n + 1) - std::pow((1.0 - s) / 4.0, n + 1));
}

double log_growth_bound(int n) {
  const double s = std::sqrt(17.0);
  const double root = (1.0 + s) / 4.0;
  // The second characteristic root has modulus < 1; fold it in via log1p
  // while its contribution is representable, drop it once it is not.
  const double lead = std::log(2.0 / s) + (n + 1) * std::log(root);
  const double other = (1.0 - s) / 4.0;
  const double correction = -std::pow(other / root, n + 1);
  if (std::abs(correction) < 1.0) return lead + std::log1p(correction);
  return lead;
}

RatioBound ratio_and_bound(const ContinuantState& state) {
  if (state.level() < 1) throw NoPredecessor();
  RatioBound out;
  out.ratio = Rational(state.t_curr(), 2 * state.t_prev());
  out.bound = growth_bound(state.level());
  out.log_bound = log_growth_bound(state.level());
  return out;
}

}  // namespace a2frac
