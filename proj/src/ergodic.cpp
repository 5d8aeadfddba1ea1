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

#include "a2frac/ergodic.hpp"

#include <cmath>

#include "a2frac/continuant.hpp"
#include "a2frac/cylinder.hpp"
#include "a2frac/errors.hpp"
#include "a2frac/rng.hpp"

namespace a2frac {

namespace {

constexpr double kLn2 = 0.6931471805599453;
const double kLogTenNinths = std::log(10.0 / 9.0);
const double kLogFiveThirds = std::log(5.0 / 3.0);

double checked_domain(double x, const char* who) {
  // Tolerate float noise at the endpoints, reject anything else.
  if (x < 0.5 - 1e-9 || x > 1.0 + 1e-9) {
    throw OutOfDomain(std::string(who) + ": argument outside [1/2, 1]");
  }
  return std::min(1.0, std::max(0.5, x));
}

}  // namespace

double invariant_cdf(double x) {
  x = checked_domain(x, "invariant_cdf");
  return (std::log(x + 1.0) - std::log(x + 2.0) + kLogFiveThirds) / kLogTenNinths;
}

double invariant_density(double x) {
  x = checked_domain(x, "invariant_density");
  return 1.0 / (kLogTenNinths * (x + 1.0) * (x + 2.0));
}

double invariant_quantile(double u) {
  if (u < 0.0 || u > 1.0) throw OutOfDomain("invariant_quantile: u outside [0, 1]");
  // h(x) = u  <=>  (x+1)/(x+2) = (3/5)(10/9)^u.
  const double t = 0.6 * std::pow(10.0 / 9.0, u);
  const double x = (2.0 * t - 1.0) / (1.0 - t);
  return std::min(1.0, std::max(0.5, x));
}

std::vector<double> sample_eta(std::uint64_t seed, int count, std::uint64_t stream) {
  if (count < 1) throw OutOfDomain("sample_eta: count must be >= 1");
  RngStream rng(seed, stream);
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(invariant_quantile(rng.uniform()));
  return out;
}

namespace {

struct SimpsonAccumulator {
  double value = 0.0;
  double error = 0.0;
};

void adaptive_simpson(const std::function<double(double)>& g, double a, double b,
                      double fa, double fm, double fb, double whole, double tol,
                      int depth, SimpsonAccumulator& acc) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = g(lm), frm = g(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    // Richardson: the refined estimate has error ~ delta/15.
    acc.value += left + right + delta / 15.0;
    acc.error += std::abs(delta) / 15.0;
    return;
  }
  adaptive_simpson(g, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, acc);
  adaptive_simpson(g, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, acc);
}

}  // namespace

QuadratureResult integrate_eta(const std::function<double(double)>& f, double tol) {
  if (tol <= 0.0) throw OutOfDomain("integrate_eta: tol must be positive");
  const auto g = [&f](double x) { return f(x) * invariant_density(x); };
  const double a = 0.5, b = 1.0;
  const double fa = g(a), fb = g(b), fm = g(0.75);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  SimpsonAccumulator acc;
  adaptive_simpson(g, a, b, fa, fm, fb, whole, tol, 40, acc);
  if (acc.error > tol) {
    throw NonConvergence("integrate_eta: error estimate above tolerance at depth limit");
  }
  return {acc.value, acc.error};
}

LevyConstants compute_levy_constants(double tol) {
  const auto quad = integrate_eta([](double x) { return -std::log(x); }, tol);
  LevyConstants out;
  out.G = quad.value;
  out.q_growth = std::exp(out.G);
  out.cylinder_rate = std::exp(-2.0 * out.G);
  out.quadrature_error = quad.error;
  return out;
}

PreservationCheck check_measure_preservation(double alpha, double beta) {
  if (!(0.5 <= alpha && alpha < beta && beta <= 1.0)) {
    throw BadInterval("check_measure_preservation: need 1/2 <= alpha < beta <= 1");
  }
  PreservationCheck out;
  out.lhs = invariant_cdf(beta) - invariant_cdf(alpha);
  // Preimage branches 1/(x + 1/2) and 1/(x + 1), both order-reversing.
  out.rhs = (invariant_cdf(1.0 / (alpha + 0.5)) - invariant_cdf(1.0 / (beta + 0.5))) +
            (invariant_cdf(1.0 / (alpha + 1.0)) - invariant_cdf(1.0 / (beta + 1.0)));
  return out;
}

Digit shift_step_double(double& x) {
  const Digit d = x <= 2.0 / 3.0 ? Digit::One : Digit::Half;
  x = 1.0 / x - digit_value_double(d);
  if (x < 0.5) x = 0.5;
  if (x > 1.0) x = 1.0;
  return d;
}

OrbitStatistics orbit_statistics(double x0, long steps) {
  x0 = checked_domain(x0, "orbit_statistics");
  if (steps < 1) throw OutOfDomain("orbit_statistics: steps must be >= 1");
  OrbitStatistics out;
  out.steps = steps;

  const bool exact_continuants = steps <= 100000;
  ContinuantState state;
  double log_r = 0.0;  // ln q_n via the ratio recursion r_n = a_n + 1/r_{n-1}
  double r = 0.0;
  double x = x0;
  double sum_log = 0.0;
  long halves = 0;
  for (long k = 0; k < steps; ++k) {
    sum_log += std::log(x);
    const Digit d = shift_step_double(x);
    if (d == Digit::Half) ++halves;
    if (exact_continuants) {
      state.step(d);
    } else {
      const double a = digit_value_double(d);
      r = k == 0 ? a : a + 1.0 / r;
      log_r += std::log(r);
    }
  }
  out.mean_log = sum_log / static_cast<double>(steps);
  out.digit_freq_half = static_cast<double>(halves) / static_cast<double>(steps);
  if (exact_continuants) {
    out.log_cylinder_rate = log_cylinder_length(state) / static_cast<double>(steps);
  } else {
    // lambda(Delta_n) = 1/(q_n^2 (1/r_n + 1)(1/r_n + 2)).
    const double inv_r = 1.0 / r;
    out.log_cylinder_rate =
        -(2.0 * log_r + std::log1p(inv_r) + std::log(2.0 + inv_r)) /
        static_cast<double>(steps);
  }
  return out;
}

double q_growth_rate(double x0, long steps) {
  x0 = checked_domain(x0, "q_growth_rate");
  if (steps < 1) throw OutOfDomain("q_growth_rate: steps must be >= 1");
  if (steps > 100000) throw CapExceeded("q_growth_rate: exact continuants capped at 1e5 steps");
  ContinuantState state;
  double x = x0;
  for (long k = 0; k < steps; ++k) state.step(shift_step_double(x));
  return state.log_q() / static_cast<double>(steps);
}

double q_growth_rate(const DigitWord& word) {
  if (word.empty()) throw EmptyWord();
  const ContinuantState state = run_word(word);
  return state.log_q() / static_cast<double>(word.size());
}

}  // namespace a2frac
