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

#ifndef A2FRAC_RATIONAL_HPP
#define A2FRAC_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace a2frac {

// Exact arithmetic backbone. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant the domain types need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Natural log of a positive big integer, usable far beyond double range.
double log_bigint(const BigInt& x);

// log(num) - log(den); exact rationals never overflow on the way in.
double log_rational(const Rational& r);

// Accepts "num/den" or a plain base-10 decimal string ("0.6" -> 3/5 exactly).
Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& r);

// Exact double -> rational conversion (doubles are dyadic rationals).
Rational rational_from_double(double x);

bool is_perfect_square(const BigInt& x, BigInt* root = nullptr);

}  // namespace a2frac

#endif  // A2FRAC_RATIONAL_HPP
