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

#ifndef A2FRAC_STATS_HPP
#define A2FRAC_STATS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace a2frac {

// One-sample Kolmogorov-Smirnov statistic sup_x |F_n(x) - F(x)| against a
// reference CDF evaluated at the sample points.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

// Kolmogorov distance restricted to a grid of evaluation points: max over the
// grid of |F_n(x) - F(x)| with F given as (x, F(x)) pairs.
inline double ks_on_grid(std::vector<double> samples,
                         const std::vector<std::pair<double, double>>& grid) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (const auto& [x, f] : grid) {
    const auto it = std::upper_bound(samples.begin(), samples.end(), x);
    const double emp = static_cast<double>(it - samples.begin()) / n;
    d = std::max(d, std::abs(emp - f));
  }
  return d;
}

}  // namespace a2frac

#endif  // A2FRAC_STATS_HPP
