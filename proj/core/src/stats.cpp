// Copyright 2026 The lowdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lowdeg/stats.hpp"

#include <algorithm>
#include <cmath>

namespace lowdeg {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // The bounds are exactly 0 and 1 at the extremes; avoid rounding residue.
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

ConjectureMetric conjecture_metric(std::uint64_t null_correct,
                                   std::uint64_t null_trials,
                                   std::uint64_t planted_correct,
                                   std::uint64_t planted_trials, double z) {
  const Interval a = wilson_interval(null_correct, null_trials, z);
  const Interval b = wilson_interval(planted_correct, planted_trials, z);
  const double pa = null_trials ? static_cast<double>(null_correct) /
                                      static_cast<double>(null_trials)
                                : 0.0;
  const double pb = planted_trials ? static_cast<double>(planted_correct) /
                                         static_cast<double>(planted_trials)
                                   : 0.0;
  return {0.5 * pa + 0.5 * pb,
          {0.5 * (a.low + b.low), 0.5 * (a.high + b.high)}};
}

std::size_t floor_scaled(double factor, std::size_t n) {
  const double x = factor * static_cast<double>(n);
  if (x <= 0.0) return 0;
  return static_cast<std::size_t>(std::floor(x * (1.0 + 1e-12) + 1e-12));
}

}  // namespace lowdeg
