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

#include "a2frac/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "a2frac/errors.hpp"

namespace a2frac {

double log_bigint(const BigInt& x) {
  if (x <= 0) throw OutOfDomain("log_bigint requires a positive argument");
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  // Top 53 bits as a double mantissa plus the shifted-out exponent.
  const unsigned shift = bits - 52;
  const double mant = BigInt(x >> shift).convert_to<double>();
  return std::log(mant) + shift * 0.6931471805599453;
}

double log_rational(const Rational& r) {
  return log_bigint(numerator(r)) - log_bigint(denominator(r));
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      throw ParseError("invalid rational literal '" + text + "'");
    }
  }
  // Base-10 decimal, converted exactly as written.
  std::string digits;
  int frac_digits = 0;
  bool seen_point = false, negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_point) throw ParseError("invalid decimal literal '" + text + "'");
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw ParseError("invalid decimal literal '" + text + "'");
    }
  }
  if (digits.empty()) throw ParseError("invalid decimal literal '" + text + "'");
  BigInt num(digits);
  if (negative) num = -num;
  BigInt den = 1;
  for (int k = 0; k < frac_digits; ++k) den *= 10;
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw OutOfDomain("non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an exact integer for any finite double.
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

bool is_perfect_square(const BigInt& x, BigInt* root) {
  if (x < 0) return false;
  const BigInt r = boost::multiprecision::sqrt(x);
  if (r * r != x) return false;
  if (root != nullptr) *root = r;
  return true;
}

}  // namespace a2frac
