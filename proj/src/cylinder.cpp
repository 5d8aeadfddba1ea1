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

#include "a2frac/cylinder.hpp"

#include <ostream>
#include <utility>

#include "a2frac/errors.hpp"
#include "a2frac/representation.hpp"

namespace a2frac {

namespace {

std::pair<Rational, Rational> endpoints(const ContinuantState& st) {
  // The 2^{n+1} scales cancel: the t = 1/2 endpoint is
  // (S_n + S_{n-1})/(T_n + T_{n-1}), the t = 1 endpoint
  // (S_n + 2 S_{n-1})/(T_n + 2 T_{n-1}).
  Rational at_half(st.s_curr() + st.s_prev(), st.t_curr() + st.t_prev());
  Rational at_one(st.s_curr() + 2 * st.s_prev(), st.t_curr() + 2 * st.t_prev());
  if (at_half <= at_one) return {std::move(at_half), std::move(at_one)};
  return {std::move(at_one), std::move(at_half)};
}

Rational length_from_state(const ContinuantState& st) {
  // 1/((q_{n-1} + q_n)(q_{n-1} + 2 q_n)) with the scales restored.
  const BigInt d1 = 2 * st.t_prev() + st.t_curr();
  const BigInt d2 = 2 * (st.t_prev() + st.t_curr());
  return Rational(BigInt(1) << (2 * st.level() + 2), d1 * d2);
}

}  // namespace

Cylinder cylinder(const DigitWord& word) {
  if (word.empty()) throw EmptyWord();
  const ContinuantState st = run_word(word);
  auto [left, right] = endpoints(st);
  return Cylinder{word, std::move(left), std::move(right)};
}

Rational cylinder_length(const DigitWord& word) {
  if (word.empty()) throw EmptyWord();
  return length_from_state(run_word(word));
}

double log_cylinder_length(const ContinuantState& state) {
  const BigInt d1 = 2 * state.t_prev() + state.t_curr();
  const BigInt d2 = 2 * (state.t_prev() + state.t_curr());
  return (2 * state.level() + 2) * 0.6931471805599453 - log_bigint(d1) - log_bigint(d2);
}

Cylinder locate(const Rational& x, int n) {
  return cylinder(encode(x, n));
}

namespace {

struct PartitionScan {
  Rational prev_right = Rational(1, 2);
  Rational length_sum = 0;
  bool ok = true;
};

// In-order walk of the level-n cylinders, left to right. The branch map
// t -> [w; t] has derivative sign (-1)^level, so the visit order of the two
// children flips with the parity of the level.
void walk(const ContinuantState& st, int remaining, PartitionScan& scan) {
  if (!scan.ok) return;
  if (remaining == 0) {
    auto [left, right] = endpoints(st);
    if (left != scan.prev_right) {
      scan.ok = false;
      return;
    }
    scan.length_sum += right - left;
    scan.prev_right = std::move(right);
    return;
  }
  const bool increasing = st.level() % 2 == 0;
  const Digit first = increasing ? Digit::One : Digit::Half;
  const Digit second = increasing ? Digit::Half : Digit::One;
  walk(advance(st, first), remaining - 1, scan);
  walk(advance(st, second), remaining - 1, scan);
}

}  // namespace

bool partition_check(int n, int cap) {
  if (n < 1) throw BadDepth("partition level must be >= 1");
  if (n > cap) throw CapExceeded("partition level exceeds cap");
  PartitionScan scan;
  walk(ContinuantState(), n, scan);
  return scan.ok && scan.prev_right == 1 && scan.length_sum == Rational(1, 2);
}

void emit_cylinder_csv(std::ostream& out, const Cylinder& cyl, bool header) {
  if (header) out << "level,word,left,right,length\n";
  out << cyl.word.size() << ',' << format_word(cyl.word) << ','
      << format_rational(cyl.left) << ',' << format_rational(cyl.right) << ','
      << format_rational(cyl.length()) << '\n';
}

}  // namespace a2frac
