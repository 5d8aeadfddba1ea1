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

#include "a2frac/representation.hpp"

#include <algorithm>
#include <cmath>

#include "a2frac/errors.hpp"

namespace a2frac {

namespace {

const Rational kHalf(1, 2);
const Rational kTwoThirds(2, 3);

void require_domain(const Rational& x) {
  if (x < kHalf || x > 1) {
    throw OutOfDomain("value " + format_rational(x) + " outside [1/2, 1]");
  }
}

}  // namespace

Digit digit_of(const Rational& x) {
  require_domain(x);
  return x <= kTwoThirds ? Digit::One : Digit::Half;
}

Rational shift(const Rational& x) {
  const Digit d = digit_of(x);
  Rational y = Rational(denominator(x), numerator(x)) - digit_value(d);
  return y;
}

DigitWord encode(const Rational& x, int depth) {
  if (depth < 1) throw BadDepth("encode depth must be >= 1");
  require_domain(x);
  DigitWord word;
  word.reserve(depth);
  Rational y = x;
  for (int i = 0; i < depth; ++i) {
    const Digit d = digit_of(y);
    word.push_back(d);
    y = Rational(denominator(y), numerator(y)) - digit_value(d);
  }
  return word;
}

DigitWord encode(double x, int depth) {
  if (depth > 40) {
    throw BadDepth("float encode is capped at depth 40; use the exact overload");
  }
  return encode(rational_from_double(x), depth);
}

EventuallyPeriodicWord::EventuallyPeriodicWord(DigitWord pre, DigitWord per)
    : preamble(std::move(pre)), period(std::move(per)) {
  // Reduce the period to its primitive block.
  const std::size_t len = period.size();
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < len && ok; ++i) ok = period[i] == period[i % p];
    if (ok) {
      period.resize(p);
      break;
    }
  }
}

Digit EventuallyPeriodicWord::at(std::size_t i) const {
  if (i < preamble.size()) return preamble[i];
  if (period.empty()) throw OutOfDomain("finite word has no digit at that position");
  return period[(i - preamble.size()) % period.size()];
}

DigitWord EventuallyPeriodicWord::prefix(std::size_t n) const {
  DigitWord out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

std::string format_periodic_word(const EventuallyPeriodicWord& word) {
  std::string out = format_word(word.preamble);
  if (!word.period.empty()) {
    out.push_back('(');
    out += format_word(word.period);
    out.push_back(')');
  }
  return out;
}

EventuallyPeriodicWord parse_periodic_word(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) {
    if (text.find(')') != std::string::npos) throw ParseError("unmatched ')'");
    return EventuallyPeriodicWord(parse_word(text), {});
  }
  if (text.back() != ')' || text.find(')') != text.size() - 1) {
    throw ParseError("malformed period in '" + text + "'");
  }
  DigitWord pre = parse_word(text.substr(0, open));
  DigitWord per = parse_word(text.substr(open + 1, text.size() - open - 2));
  if (per.empty()) throw ParseError("empty period in '" + text + "'");
  return EventuallyPeriodicWord(std::move(pre), std::move(per));
}

DecodedValue decode(const EventuallyPeriodicWord& word) {
  DecodedValue out;
  if (word.finite()) {
    if (word.preamble.empty()) throw EmptyWord();
    out.exact = convergent(word.preamble);
    out.approx = to_double(*out.exact);
    return out;
  }

  // Tail value: fixed point of t = (p_L + t p_{L-1})/(q_L + t q_{L-1}), i.e.
  // q_{L-1} t^2 + (q_L - p_{L-1}) t - p_L = 0.
  const ContinuantState per = run_word(word.period);
  const Rational a = per.q_prev();
  const Rational b = per.q() - per.p_prev();
  const Rational c = -per.p();
  const Rational disc = b * b - 4 * a * c;

  std::optional<Rational> tail_exact;
  double tail_approx;
  {
    BigInt num_root, den_root;
    if (is_perfect_square(numerator(disc), &num_root) &&
        is_perfect_square(denominator(disc), &den_root)) {
      const Rational sq(num_root, den_root);
      tail_exact = (-b + sq) / (2 * a);
      tail_approx = to_double(*tail_exact);
    } else {
      tail_approx = (-to_double(b) + std::sqrt(to_double(disc))) / (2 * to_double(a));
    }
  }

  if (word.preamble.empty()) {
    if (tail_exact) {
      out.exact = *tail_exact;
    } else {
      out.quad_a = a;
      out.quad_b = b;
      out.quad_c = c;
    }
    out.approx = tail_approx;
    return out;
  }

  const ContinuantState pre = run_word(word.preamble);
  const Rational pm = pre.p(), qm = pre.q();
  const Rational pm1 = pre.p_prev(), qm1 = pre.q_prev();
  if (tail_exact) {
    const Rational& t = *tail_exact;
    out.exact = (pm + t * pm1) / (qm + t * qm1);
    out.approx = to_double(*out.exact);
    return out;
  }
  out.approx = (to_double(pm) + tail_approx * to_double(pm1)) /
               (to_double(qm) + tail_approx * to_double(qm1));
  // Substitute t = (p_M - q_M x)/(q_{M-1} x - p_{M-1}) into the tail
  // quadratic to get the quadratic satisfied by x itself.
  out.quad_a = a * qm * qm - b * qm * qm1 + c * qm1 * qm1;
  out.quad_b = -2 * a * pm * qm + b * (pm * qm1 + qm * pm1) - 2 * c * qm1 * pm1;
  out.quad_c = a * pm * pm - b * pm * pm1 + c * pm1 * pm1;
  return out;
}

EventuallyPeriodicWord canonicalize(const EventuallyPeriodicWord& word) {
  if (word.finite()) return word;
  DigitWord pre = word.preamble;
  DigitWord per = word.period;  // already primitive

  // Fold preamble digits that merely repeat the tail into the period phase.
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    pre.pop_back();
  }

  // Forbidden representation: tail ...; 1/2; (1/2; 1). After folding it shows
  // up as period (1/2; 1) preceded by a preamble ending in 1/2.
  const bool alternating =
      per.size() == 2 && per[0] != per[1];
  if (alternating && per[0] == Digit::Half && !pre.empty()) {
    pre.back() = Digit::One;
    per = {Digit::One, Digit::Half};
  }
  return EventuallyPeriodicWord(std::move(pre), std::move(per));
}

bool is_a2_binary(const EventuallyPeriodicWord& word) {
  if (word.finite()) return false;
  return word.period.size() == 2 && word.period[0] != word.period[1];
}

}  // namespace a2frac
