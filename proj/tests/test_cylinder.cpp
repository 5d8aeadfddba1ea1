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
#include <sstream>

#include <doctest.h>

#include "a2frac/cylinder.hpp"
#include "a2frac/errors.hpp"
#include "a2frac/representation.hpp"

using namespace a2frac;

namespace {

DigitWord random_word(std::mt19937_64& rng, int len) {
  DigitWord w;
  for (int i = 0; i < len; ++i) w.push_back((rng() & 1) ? Digit::Half : Digit::One);
  return w;
}

}  // namespace

TEST_CASE("level-1 and level-2 cylinders") {
  Cylinder c = cylinder({Digit::One});
  CHECK(c.left == Rational(1, 2));
  CHECK(c.right == Rational(2, 3));
  CHECK(c.length() == Rational(1, 6));

  c = cylinder({Digit::Half});
  CHECK(c.left == Rational(2, 3));
  CHECK(c.right == Rational(1));
  CHECK(c.length() == Rational(1, 3));

  c = cylinder({Digit::One, Digit::One});
  CHECK(c.left == Rational(3, 5));
  CHECK(c.right == Rational(2, 3));
  CHECK(c.length() == Rational(1, 15));

  CHECK(cylinder_length({Digit::Half, Digit::Half}) == Rational(4, 21));
  CHECK_THROWS_AS(cylinder({}), EmptyWord);
}

TEST_CASE("length formula matches endpoint difference") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const DigitWord w = random_word(rng, 1 + static_cast<int>(rng() % 100));
    const Cylinder c = cylinder(w);
    CHECK(c.length() == cylinder_length(w));
  }
}

TEST_CASE("length bounds in terms of q_n^2") {
  std::mt19937_64 rng(43);
  const Rational fifteen_fourths(15, 4);
  SUBCASE("words starting with digit 1: [1/(6 q^2), 1/(3.75 q^2)]") {
    for (int trial = 0; trial < 100; ++trial) {
      DigitWord w = random_word(rng, 1 + static_cast<int>(rng() % 60));
      w.front() = Digit::One;
      const Rational len = cylinder_length(w);
      const Rational q = run_word(w).q();
      CHECK(len >= Rational(1) / (6 * q * q));
      CHECK(len <= Rational(1) / (fifteen_fourths * q * q));
    }
  }
  SUBCASE("arbitrary words: [1/(12 q^2), 9/(28 q^2)] from the ratio envelope") {
    for (int trial = 0; trial < 100; ++trial) {
      const DigitWord w = random_word(rng, 1 + static_cast<int>(rng() % 60));
      const Rational len = cylinder_length(w);
      const Rational q = run_word(w).q();
      CHECK(len >= Rational(1) / (12 * q * q));
      CHECK(len <= Rational(9) / (28 * q * q));
    }
    // Both extremes are attained, at h and h1.
    CHECK(cylinder_length({Digit::Half}) == Rational(1, 3));  // q = 1/2
    CHECK(cylinder_length({Digit::Half, Digit::One}) == Rational(1, 7));  // q = 3/2
  }
}

TEST_CASE("nesting: appending a digit shrinks the cylinder") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    DigitWord w = random_word(rng, 1 + static_cast<int>(rng() % 30));
    const Cylinder outer = cylinder(w);
    w.push_back((rng() & 1) ? Digit::Half : Digit::One);
    const Cylinder inner = cylinder(w);
    CHECK(outer.left <= inner.left);
    CHECK(inner.right <= outer.right);
  }
}

TEST_CASE("locate places points in their cylinders") {
  Cylinder c = locate(Rational(3, 5), 1);
  CHECK(c.left == Rational(1, 2));
  CHECK(c.right == Rational(2, 3));

  c = locate(Rational(1), 2);
  CHECK(c.word == DigitWord{Digit::Half, Digit::One});

  // Boundary point follows the canonical tie-break into the digit-1 side.
  c = locate(Rational(2, 3), 1);
  CHECK(c.word == DigitWord{Digit::One});

  CHECK_THROWS_AS(locate(Rational(1, 4), 1), OutOfDomain);
}

TEST_CASE("level-n cylinders partition [1/2, 1]") {
  CHECK(partition_check(1));
  CHECK(partition_check(2));
  CHECK(partition_check(10));
  CHECK_THROWS_AS(partition_check(21), CapExceeded);
  CHECK_THROWS_AS(partition_check(0), BadDepth);
}

TEST_CASE("maximal cylinder length decreases with the level") {
  double prev_max = 1.0;
  for (int n = 1; n <= 20; ++n) {
    // The widest level-n cylinder has the all-halves word (slowest q growth).
    double max_len = to_double(cylinder_length(DigitWord(n, Digit::Half)));
    CHECK(max_len < prev_max);
    prev_max = max_len;
  }
  // Spot-check the all-halves claim at small levels by enumeration.
  for (int n = 1; n <= 10; ++n) {
    Rational best = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      DigitWord w;
      for (int i = 0; i < n; ++i) {
        w.push_back((mask >> i & 1) ? Digit::Half : Digit::One);
      }
      best = std::max(best, cylinder_length(w));
    }
    CHECK(best == cylinder_length(DigitWord(n, Digit::Half)));
  }
}

TEST_CASE("csv emitter") {
  std::ostringstream out;
  emit_cylinder_csv(out, cylinder({Digit::One, Digit::Half}), true);
  CHECK(out.str() == "level,word,left,right,length\n2,1h,1/2,3/5,1/10\n");
}
