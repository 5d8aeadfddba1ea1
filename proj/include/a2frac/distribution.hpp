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

#ifndef A2FRAC_DISTRIBUTION_HPP
#define A2FRAC_DISTRIBUTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "a2frac/representation.hpp"

namespace a2frac {

// Digit-probability law of the random fraction xi = [xi_1; xi_2; ...] with
// independent digits: entry n is P(xi_n = 1/2). Restricted to a finite
// preamble plus a periodic tail (the general case is open).
struct ProbabilitySchedule {
  std::vector<double> preamble;
  std::vector<double> period;  // length >= 1

  // 1-based position -> P(digit = 1/2).
  double p_half(std::size_t n) const;
  double p_one(std::size_t n) const { return 1.0 - p_half(n); }

  // Throws InvalidProbability on entries outside [0,1] or an empty period.
  void validate() const;

  static ProbabilitySchedule constant(double p) { return {{}, {p}}; }
  static ProbabilitySchedule from_json(const std::string& text);
  std::string to_json() const;
};

enum class Verdict { Discrete, SingularContinuous, ContinuousUnresolved, Inconclusive };

enum class ExponentConvention { AsPrinted, FrequencyCorrected };

std::string to_string(Verdict v);
std::string to_string(ExponentConvention c);

// alpha = ln(25/24)/ln(10/9), the eta-measure of the level-1 cylinder of
// digit 1: Delta_1(1) = [1/2, 2/3]. The orbit frequency of digit 1/2 is
// therefore 1 - alpha (Delta_1(1/2) = [2/3, 1]); AsPrinted keeps the
// exponents the way the source formula prints them, FrequencyCorrected swaps
// them to match the measured digit frequencies.
double digit_one_frequency_constant();

struct Classification {
  Verdict verdict;
  int theorem;  // criterion id in reports: 3 = discreteness dichotomy,
                // 4 = periodic-product singularity test, 0 = none
  ExponentConvention convention;
  double lhs;  // periodic product of the tail probabilities
  double rhs;  // e^{-2GL}
  double G;
  std::string note;

  std::string to_json() const;
};

// Discreteness criterion: the product over n of max(p_half, p_one) is
// positive. Every factor is >= 1/2, so for preamble+period schedules this is
// decidable exactly: positive iff every period entry is 0 or 1.
bool classify_discrete(const ProbabilitySchedule& s);

struct Atom {
  EventuallyPeriodicWord word;
  double mass;
};

// The top_k highest-mass support points of a discrete schedule, masses
// sorted descending. Throws NotDiscrete when the schedule is not discrete.
std::vector<Atom> atoms(const ProbabilitySchedule& s, int top_k);

// Full classifier: the discrete/singular dichotomy first, then the
// singularity test comparing the periodic product against e^{-2GL} at
// tolerance tol.
Classification classify(const ProbabilitySchedule& s,
                        ExponentConvention convention, double tol);

struct CdfQuery {
  double x;
  int depth;
  double result;
  double error_bound;  // product of branch probabilities along x's digit path
};

// F_xi(x) by unrolling the backward functional equation along the digit path
// of x (taken exactly; x is converted to an exact rational). After `depth`
// levels the unresolved tail term is bracketed by [0, 1].
CdfQuery cdf(const ProbabilitySchedule& s, double x, int depth);
CdfQuery cdf(const ProbabilitySchedule& s, const Rational& x, int depth);

// Monte Carlo draws of xi truncated at `depth` digits; each sample is the
// exact convergent of its digit word (evaluated in double). Per-point
// truncation error is at most the level-`depth` cylinder length.
std::vector<double> sample_xi(const ProbabilitySchedule& s, std::uint64_t seed,
                              int count, int depth, std::uint64_t stream = 0);

enum class PathSource { Eta, Xi };

// (1/n) sum of ln p_(digit_k)k along the digit path of one point drawn from
// the requested source. Throws ZeroProbabilityOnPath if a traversed digit has
// probability zero.
double likelihood_rate(const ProbabilitySchedule& s, PathSource source,
                       long steps, std::uint64_t seed);

}  // namespace a2frac

#endif  // A2FRAC_DISTRIBUTION_HPP
