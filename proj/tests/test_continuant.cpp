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

#include <cmath>
#include <random>

#include <doctest.h>

#include "a2frac/continuant.hpp"
#include "a2frac/errors.hpp"

using namespace a2frac;

namespace {

// Independent oracle: evaluate [a_1;...;a_n] bottom-up by nested division,
// never touching the continuant recursion.
Rational nested_eval(const DigitWord& word) {
  Rational v = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    v = Rational(1) / (digit_value(*it) + v);
  }
  return v;
}

DigitWord random_word(std::mt19937_64& rng, int len) {
  DigitWord w;
  w.reserve(len);
  for (int i = 0; i < len; ++i) w.push_back((rng() & 1) ? Digit::Half : Digit::One);
  return w;
}

}  // namespace

TEST_CASE("initial state matches the stated initial conditions") {
  const ContinuantState s = initial_state();
  CHECK(s.level() == 0);
  CHECK(s.p() == 0);
  CHECK(s.q() == 1);
  CHECK(s.p_prev() == 1);
  CHECK(s.q_prev() == 0);
}

TEST_CASE("single recursion steps") {
  const ContinuantState one = advance(initial_state(), Digit::One);
  CHECK(one.p() == 1);
  CHECK(one.q() == 1);

  const ContinuantState half = advance(initial_state(), Digit::Half);
  CHECK(half.p() == 1);
  CHECK(half.q() == Rational(1, 2));
}

TEST_CASE("hand-computed continuants") {
  ContinuantState s = run_word({Digit::One, Digit::One});
  CHECK(s.p() == 1);
  CHECK(s.q() == 2);

  s = run_word({Digit::One, Digit::Half});
  CHECK(s.p() == Rational(1, 2));
  CHECK(s.q() == Rational(3, 2));

  s = run_word({Digit::Half, Digit::One, Digit::Half});
  CHECK(s.q() == Rational(5, 4));
}

TEST_CASE("convergents of short words") {
  CHECK(convergent({Digit::One}) == 1);
  CHECK(convergent({Digit::Half}) == 2);
  CHECK(convergent({Digit::One, Digit::One}) == Rational(1, 2));
  CHECK(convergent({Digit::One, Digit::Half}) == Rational(1, 3));
  CHECK_THROWS_AS(convergent({}), EmptyWord);
}

TEST_CASE("determinant identity") {
  CHECK(check_determinant({Digit::One}));
  CHECK(check_determinant({Digit::Half, Digit::One, Digit::Half, Digit::One}));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(check_determinant(random_word(rng, 1000)));
  }
}

TEST_CASE("convergent equals nested-division oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const DigitWord w = random_word(rng, 1 + static_cast<int>(rng() % 60));
    CHECK(convergent(w) == nested_eval(w));
  }
}

TEST_CASE("denominator ratio stays in [1, 2]") {
  SUBCASE("extremes") {
    ContinuantState s = run_word({Digit::One});
    CHECK(ratio_and_bound(s).ratio == 1);
    s = run_word({Digit::One, Digit::One});
    CHECK(ratio_and_bound(s).ratio == 2);
  }
  SUBCASE("words starting with digit 1: band holds at every prefix") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      ContinuantState s;
      s.step(Digit::One);
      CHECK(s.ratio_in_unit_band());
      for (int i = 1; i < 200; ++i) {
        s.step((rng() & 1) ? Digit::Half : Digit::One);
        CHECK(s.ratio_in_unit_band());
      }
    }
  }
  SUBCASE("arbitrary words: the sharp envelope is [1/2, 3]") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
      ContinuantState s;
      for (int i = 0; i < 200; ++i) {
        s.step((rng() & 1) ? Digit::Half : Digit::One);
        CHECK(s.ratio_in_envelope());
      }
    }
    // Both envelope extremes are attained.
    ContinuantState h = run_word({Digit::Half});
    CHECK(ratio_and_bound(h).ratio == Rational(1, 2));
    h.step(Digit::One);
    CHECK(ratio_and_bound(h).ratio == 3);
  }
  SUBCASE("h(1h) stays outside [1, 2] forever") {
    // The ratio cycle converges to the boundary {1, 2} from outside, so the
    // unit band never becomes exact for this word.
    ContinuantState s = run_word({Digit::Half});
    for (int i = 0; i < 50; ++i) {
      s.step(i % 2 == 0 ? Digit::One : Digit::Half);
      CHECK_FALSE(s.ratio_in_unit_band());
      CHECK(s.ratio_in_envelope());
    }
  }
  SUBCASE("level 0 has no ratio") {
    CHECK_THROWS_AS(ratio_and_bound(initial_state()), NoPredecessor);
  }
}

TEST_CASE("q_n stays above the closed-form growth floor w_n") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    ContinuantState s;
    for (int i = 0; i < 200; ++i) {
      s.step((rng() & 1) ? Digit::Half : Digit::One);
      const RatioBound rb = ratio_and_bound(s);
      CHECK(s.log_q() >= rb.log_bound - 1e-9);
    }
  }
  // The all-halves word attains the floor exactly: w_n is its q_n.
  ContinuantState s;
  for (int i = 0; i < 100; ++i) {
    s.step(Digit::Half);
    CHECK(std::abs(s.log_q() - log_growth_bound(s.level())) < 1e-9);
  }
  // All-ones q_n are Fibonacci and exceed w_n's root (1+sqrt 17)/4.
  ContinuantState ones;
  for (int i = 0; i < 100; ++i) ones.step(Digit::One);
  CHECK(ones.log_q() > log_growth_bound(ones.level()) + 10.0);
}

TEST_CASE("log of the growth bound agrees with the direct formula") {
  for (int n = 1; n <= 300; ++n) {
    CHECK(std::abs(log_growth_bound(n) - std::log(growth_bound(n))) < 1e-9);
  }
}

TEST_CASE("continuant denominators are powers of two") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const ContinuantState s = run_word(random_word(rng, 100));
    for (const Rational& r : {s.p(), s.q()}) {
      BigInt d = denominator(r);
      while (d % 2 == 0) d /= 2;
      CHECK(d == 1);
    }
  }
}

TEST_CASE("word serialization round-trips") {
  const DigitWord w = {Digit::One, Digit::Half, Digit::One, Digit::Half};
  CHECK(format_word(w) == "1h1h");
  CHECK(parse_word("1h1h") == w);
  CHECK_THROWS_AS(parse_word("1x"), ParseError);
}
