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

#ifndef A2FRAC_CONTINUANT_HPP
#define A2FRAC_CONTINUANT_HPP

#include <utility>

#include "a2frac/digit.hpp"
#include "a2frac/rational.hpp"

namespace a2frac {

// Running state of the two-term continuant recursion
//
//   p_n = a_n p_{n-1} + p_{n-2},   q_n = a_n q_{n-1} + q_{n-2},
//
// with p_{-1} = 1, q_{-1} = 0, p_0 = 0, q_0 = 1.
//
// Because all digits are dyadic, the state is kept as integers scaled by
// 2^{n+1}: with S_n = 2^{n+1} p_n, T_n = 2^{n+1} q_n the recursion becomes
// S_n = (2 a_n) S_{n-1} + 4 S_{n-2}, which avoids rational normalization on
// the hot path. The public surface is exact rationals.
class ContinuantState {
 public:
  // Level-0 state per the initial conditions.
  ContinuantState() : level_(0), s_curr_(0), t_curr_(2), s_prev_(1), t_prev_(0) {}

  int level() const { return level_; }

  Rational p() const { return descale(s_curr_, level_); }
  Rational q() const { return descale(t_curr_, level_); }
  Rational p_prev() const { return descale(s_prev_, level_ - 1); }
  Rational q_prev() const { return descale(t_prev_, level_ - 1); }

  // One recursion step, in place.
  void step(Digit d) {
    const int two_a = d == Digit::One ? 2 : 1;
    BigInt s = two_a * s_curr_ + 4 * s_prev_;
    BigInt t = two_a * t_curr_ + 4 * t_prev_;
    s_prev_ = std::move(s_curr_);
    t_prev_ = std::move(t_curr_);
    s_curr_ = std::move(s);
    t_curr_ = std::move(t);
    ++level_;
  }

  // Exact check of p_n q_{n-1} - p_{n-1} q_n = (-1)^{n+1}. Level 0 checks the
  // initial conditions (value -1).
  bool determinant_ok() const {
    BigInt det = s_curr_ * t_prev_ - s_prev_ * t_curr_;
    BigInt expect = BigInt(1) << (2 * level_ + 1);
    if (level_ % 2 == 0) expect = -expect;
    return det == expect;
  }

  // Exact test of q_n / q_{n-1} in [1, 2]. This band holds at every level
  // for words whose first digit is 1; words starting with 1/2 can stay
  // marginally outside forever (e.g. h(1h) has ratios converging to the
  // boundary cycle {1, 2} from outside). Requires level >= 1.
  bool ratio_in_unit_band() const;

  // Exact test of the sharp global envelope q_n / q_{n-1} in [1/2, 3],
  // attained at levels 1 and 2 of h and h1. Requires level >= 1.
  bool ratio_in_envelope() const;

  // ln q_n, stable at any level.
  double log_q() const { return log_bigint(t_curr_) - (level_ + 1) * kLn2; }
  double log_q_prev() const { return log_bigint(t_prev_) - level_ * kLn2; }

  // Scaled integer views used by the cylinder module: endpoints of the level-n
  // cylinder are (S_n + S_{n-1})/(T_n + T_{n-1}) and
  // (S_n + 2 S_{n-1})/(T_n + 2 T_{n-1}).
  const BigInt& s_curr() const { return s_curr_; }
  const BigInt& t_curr() const { return t_curr_; }
  const BigInt& s_prev() const { return s_prev_; }
  const BigInt& t_prev() const { return t_prev_; }

 private:
  static constexpr double kLn2 = 0.6931471805599453;

  static Rational descale(const BigInt& v, int lvl) {
    return Rational(v, BigInt(1) << (lvl + 1));
  }

  int level_;
  BigInt s_curr_, t_curr_;  // 2^{n+1} p_n, 2^{n+1} q_n
  BigInt s_prev_, t_prev_;  // 2^n p_{n-1}, 2^n q_{n-1}
};

inline ContinuantState initial_state() { return ContinuantState(); }

inline ContinuantState advance(const ContinuantState& state, Digit d) {
  ContinuantState next = state;
  next.step(d);
  return next;
}

ContinuantState run_word(const DigitWord& word);

// p_n / q_n for n = word length; throws EmptyWord on the empty word.
Rational convergent(const DigitWord& word);

// True iff the determinant identity holds exactly at every prefix level.
bool check_determinant(const DigitWord& word);

struct RatioBound {
  Rational ratio;    // q_n / q_{n-1}, exact
  double bound;      // w_n (overflows to +inf past level ~2800)
  double log_bound;  // ln w_n, stable at any level
};

// The ratio q_n/q_{n-1} together with the closed-form growth floor w_n.
// Throws NoPredecessor at level 0.
RatioBound ratio_and_bound(const ContinuantState& state);

// w_n = (2 sqrt(17)/17) (((1+sqrt(17))/4)^{n+1} - ((1-sqrt(17))/4)^{n+1}).
//
// w_n solves w_n = w_{n-1}/2 + w_{n-2} with w_0 = 1, w_1 = 1/2, so it equals
// q_n of the all-halves word exactly — the slowest-growing denominator
// sequence. Hence q_n >= w_n for every word (digits are monotone in q), with
// equality iff every digit is 1/2. One printed form states the inequality in
// the opposite direction; that direction already fails for the all-ones word
// (Fibonacci q_n, growth (1+sqrt 5)/2 > (1+sqrt 17)/4).
double growth_bound(int n);
double log_growth_bound(int n);

}  // namespace a2frac

#endif  // A2FRAC_CONTINUANT_HPP
