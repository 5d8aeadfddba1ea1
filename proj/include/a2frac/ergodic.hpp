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

#ifndef A2FRAC_ERGODIC_HPP
#define A2FRAC_ERGODIC_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "a2frac/digit.hpp"
#include "a2frac/rational.hpp"

namespace a2frac {

// The invariant measure eta of the shift on [1/2, 1] has distribution
// function
//
//   h(x) = (ln(x+1) - ln(x+2) + ln(5/3)) / ln(10/9),
//
// with density 1/(ln(10/9) (x+1)(x+2)). Note the density is the *reciprocal*
// of one printed form in the literature; h is the primary definition and the
// reciprocal is its actual derivative (and the only normalization that
// integrates to 1).

double invariant_cdf(double x);
double invariant_density(double x);

// Closed-form inverse of h: u in [0, 1] -> x in [1/2, 1].
double invariant_quantile(double u);

// i.i.d. samples with CDF h, deterministic under (seed, stream).
std::vector<double> sample_eta(std::uint64_t seed, int count,
                               std::uint64_t stream = 0);

struct QuadratureResult {
  double value;
  double error;  // estimated absolute error
};

// Adaptive Simpson quadrature of \int f d(eta) over [1/2, 1]. Throws
// NonConvergence when the accumulated error estimate cannot be brought
// under tol within the subdivision depth limit.
QuadratureResult integrate_eta(const std::function<double(double)>& f,
                               double tol);

struct LevyConstants {
  double G;                // -\int ln x d(eta)
  double q_growth;         // e^G, a.s. growth rate of q_n^{1/n}
  double cylinder_rate;    // e^{-2G}, a.s. decay rate of lambda(Delta_n)^{1/n}
  double quadrature_error;
};

LevyConstants compute_levy_constants(double tol);

struct PreservationCheck {
  double lhs;  // eta([alpha, beta])
  double rhs;  // eta(T^{-1}[alpha, beta]) via the closed-form preimage
};

// T^{-1}([a,b]) = [1/(b+1/2), 1/(a+1/2)] u [1/(b+1), 1/(a+1)].
PreservationCheck check_measure_preservation(double alpha, double beta);

struct OrbitStatistics {
  long steps = 0;
  double mean_log = 0.0;           // Birkhoff average of ln x
  double digit_freq_half = 0.0;    // frequency of digit 1/2 along the orbit
  double log_cylinder_rate = 0.0;  // (1/n) ln lambda(Delta_n(x0))
};

// Iterates the shift from x0 in floating point (statistics only; the map is
// expanding, so no pointwise shadowing is claimed). The cylinder rate comes
// from exact integer continuants in log domain for orbits up to 10^5 steps
// and from the stable ratio recursion r_n = a_n + 1/r_{n-1} beyond that.
OrbitStatistics orbit_statistics(double x0, long steps);

// (1/n) ln q_n for the first `steps` digits of x0's orbit, from exact
// continuants. Throws CapExceeded past 10^5 steps.
double q_growth_rate(double x0, long steps);

// Same, for an explicit digit word.
double q_growth_rate(const DigitWord& word);

// One floating shift step; returns the digit taken and advances x in place.
Digit shift_step_double(double& x);

}  // namespace a2frac

#endif  // A2FRAC_ERGODIC_HPP
