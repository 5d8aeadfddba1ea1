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

#include "a2frac/cylinder.hpp"
#include "a2frac/errors.hpp"
#include "a2frac/representation.hpp"

using namespace a2frac;

namespace {

constexpr double kGolden = 0.6180339887498949;       // root of x^2 + x - 1
constexpr double kHalfFixed = 0.7807764064044151;    // root of 2x^2 + x - 2

Rational random_rational_in_domain(std::mt19937_64& rng) {
  const std::uint64_t den = 2 + rng() % 100000;
  const std::uint64_t lo = (den + 1) / 2;
  const std::uint64_t num = lo + rng() % (den - lo + 1);
  return Rational(num, den);
}

EventuallyPeriodicWord random_periodic_word(std::mt19937_64& rng) {
  DigitWord pre, per;
  const int np = rng() % 6;
  const int nq = 1 + rng() % 4;
  for (int i = 0; i < np; ++i) pre.push_back((rng() & 1) ? Digit::Half : Digit::One);
  for (int i = 0; i < nq; ++i) per.push_back((rng() & 1) ? Digit::Half : Digit::One);
  return EventuallyPeriodicWord(pre, per);
}

}  // namespace

TEST_CASE("digit_of splits the interval at 2/3") {
  CHECK(digit_of(Rational(3, 5)) == Digit::One);
  CHECK(digit_of(Rational(9, 10)) == Digit::Half);
  CHECK(digit_of(Rational(2, 3)) == Digit::One);  // boundary tie-break
  CHECK_THROWS_AS(digit_of(Rational(1, 3)), OutOfDomain);
  CHECK_THROWS_AS(digit_of(Rational(11, 10)), OutOfDomain);
}

TEST_CASE("shift drops the first digit") {
  CHECK(shift(Rational(1)) == Rational(1, 2));
  CHECK(shift(Rational(2, 3)) == Rational(1, 2));
  CHECK(shift(Rational(1, 2)) == Rational(1));
  // Fixed point of the digit-1 branch, to rational precision.
  const Rational g(61803398875ull, 100000000000ull);
  const Rational shifted = shift(g);
  CHECK(std::abs(to_double(shifted) - kGolden) < 1e-9);
}

TEST_CASE("encode produces canonical digit strings") {
  CHECK(format_word(encode(Rational(1), 4)) == "h1h1");
  CHECK(format_word(encode(Rational(1, 2), 4)) == "1h1h");
  CHECK(format_word(encode(kGolden, 5)) == "11111");
  CHECK(format_word(encode(kHalfFixed, 3)) == "hhh");
  CHECK(format_word(encode(Rational(2, 3), 5)) == "11h1h");
  CHECK_THROWS_AS(encode(0.9, 41), BadDepth);
}

TEST_CASE("periodic word parsing and formatting") {
  const auto w = parse_periodic_word("1h(1h)");
  CHECK(w.preamble == DigitWord{Digit::One, Digit::Half});
  CHECK(w.period == DigitWord{Digit::One, Digit::Half});
  CHECK(format_periodic_word(w) == "1h(1h)");
  CHECK(parse_periodic_word("111").finite());
  CHECK_THROWS_AS(parse_periodic_word("1()"), ParseError);
  CHECK_THROWS_AS(parse_periodic_word("1)h("), ParseError);
}

TEST_CASE("period is reduced to its primitive block") {
  const auto w = parse_periodic_word("(1h1h)");
  CHECK(w.period == DigitWord{Digit::One, Digit::Half});
}

TEST_CASE("decode of periodic words") {
  SUBCASE("golden-type fixed point, period (1)") {
    const auto v = decode(parse_periodic_word("(1)"));
    CHECK_FALSE(v.is_exact());
    CHECK(v.approx == doctest::Approx(kGolden).epsilon(1e-12));
    // x^2 + x - 1 = 0, up to a common factor.
    CHECK(v.quad_b / v.quad_a == 1);
    CHECK(v.quad_c / v.quad_a == -1);
  }
  SUBCASE("period (h)") {
    const auto v = decode(parse_periodic_word("(h)"));
    CHECK_FALSE(v.is_exact());
    CHECK(v.approx == doctest::Approx(kHalfFixed).epsilon(1e-12));
    CHECK(v.quad_b / v.quad_a == Rational(1, 2));
    CHECK(v.quad_c / v.quad_a == -1);
  }
  SUBCASE("rational values decode exactly") {
    CHECK(decode(parse_periodic_word("1(1h)")).exact == Rational(2, 3));
    CHECK(decode(parse_periodic_word("(1h)")).exact == Rational(1, 2));
    CHECK(decode(parse_periodic_word("(h1)")).exact == Rational(1));
    CHECK(decode(parse_periodic_word("11")).exact == Rational(1, 2));
  }
  SUBCASE("empty word is rejected") {
    CHECK_THROWS_AS(decode(EventuallyPeriodicWord{}), EmptyWord);
  }
}

TEST_CASE("canonicalize rewrites the forbidden tail") {
  const auto w = parse_periodic_word("1h(h1)");
  const auto c = canonicalize(w);
  CHECK(format_periodic_word(c) == "11(1h)");
  // Value unchanged.
  CHECK(decode(w).exact == decode(c).exact);

  CHECK(format_periodic_word(canonicalize(parse_periodic_word("(1)"))) == "(1)");
  CHECK(format_periodic_word(canonicalize(parse_periodic_word("h(h1)"))) == "1(1h)");
}

TEST_CASE("canonicalize is idempotent and value-preserving") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto w = random_periodic_word(rng);
    const auto c1 = canonicalize(w);
    const auto c2 = canonicalize(c1);
    CHECK(c1 == c2);
    const auto v0 = decode(w);
    const auto v1 = decode(c1);
    if (v0.is_exact()) {
      CHECK(v1.is_exact());
      CHECK(*v0.exact == *v1.exact);
    } else {
      CHECK(v1.approx == doctest::Approx(v0.approx).epsilon(1e-12));
    }
  }
}

TEST_CASE("is_a2_binary is a tail pattern test") {
  CHECK(is_a2_binary(parse_periodic_word("1(1h)")));
  CHECK(is_a2_binary(parse_periodic_word("(1h)")));
  CHECK(is_a2_binary(parse_periodic_word("hh(h1)")));
  CHECK_FALSE(is_a2_binary(parse_periodic_word("(1)")));
  CHECK_FALSE(is_a2_binary(parse_periodic_word("(h)")));
  CHECK_FALSE(is_a2_binary(parse_periodic_word("(1hh)")));
  CHECK_FALSE(is_a2_binary(parse_periodic_word("111")));
}

TEST_CASE("encode round-trip: x lands in its own cylinder") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational x = random_rational_in_domain(rng);
    const int depth = 1 + static_cast<int>(rng() % 30);
    const DigitWord w = encode(x, depth);
    const Cylinder cyl = cylinder(w);
    CHECK(cyl.left <= x);
    CHECK(x <= cyl.right);
    // The convergent approximates x to within 1/(q_n (q_n + q_{n-1})): the
    // cylinder is the t in [1/2, 1] slice of the Moebius image, while the
    // convergent is its t = 0 endpoint, so the full-slice diameter is the
    // right bound (the cylinder length alone can be up to 5x smaller).
    const ContinuantState st = run_word(w);
    const Rational conv = convergent(w);
    CHECK(abs(conv - x) <= Rational(1) / (st.q() * (st.q() + st.q_prev())));
  }
}

TEST_CASE("shift commutes with dropping the first digit") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    // Canonical words only: the numeric shift takes the canonical branch, so
    // a non-canonical representation of an A2-binary point would disagree.
    auto w = canonicalize(random_periodic_word(rng));
    const auto v = decode(w);

    EventuallyPeriodicWord dropped = w;
    if (!dropped.preamble.empty()) {
      dropped.preamble.erase(dropped.preamble.begin());
    } else {
      std::rotate(dropped.period.begin(), dropped.period.begin() + 1, dropped.period.end());
      dropped = EventuallyPeriodicWord(dropped.preamble, dropped.period);
    }
    const auto dv = decode(dropped);
    if (v.is_exact()) {
      CHECK(shift(*v.exact) == *dv.exact);
    } else {
      const double shifted = 1.0 / v.approx - digit_value_double(w.at(0));
      CHECK(dv.approx == doctest::Approx(shifted).epsilon(1e-10));
    }
  }
}

TEST_CASE("encode of a decoded word returns its canonical digits") {
  std::mt19937_64 rng(37);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = canonicalize(random_periodic_word(rng));
    const auto v = decode(w);
    if (!v.is_exact()) continue;  // exact path only; float encode is capped
    // Canonical words are exactly what digit_of/shift produce, including at
    // the endpoints (1/2 continues 1h1h..., 1 continues h1h1...).
    const int depth = 12;
    CHECK(encode(*v.exact, depth) == w.prefix(depth));
    ++checked;
  }
  CHECK(checked > 20);
}
