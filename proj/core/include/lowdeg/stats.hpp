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

#pragma once

#include <cstddef>
#include <cstdint>

namespace lowdeg {

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

inline constexpr double kDefaultZ = 1.959963984540054;  // two-sided 95%

/// Wilson score interval for a binomial proportion. Returns [0, 1] when
/// trials == 0.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = kDefaultZ);

/// Success probability of a two-sided test,
///   1/2 P_null(verdict = Null) + 1/2 P_planted(verdict = Planted),
/// with a conservative interval formed from the per-side Wilson intervals.
struct ConjectureMetric {
  double value = 0.0;
  Interval interval;
};

ConjectureMetric conjecture_metric(std::uint64_t null_correct,
                                   std::uint64_t null_trials,
                                   std::uint64_t planted_correct,
                                   std::uint64_t planted_trials,
                                   double z = kDefaultZ);

/// floor(factor * n) with a small guard against representation error, so
/// that e.g. 0.29 * 100 floors to 29.
std::size_t floor_scaled(double factor, std::size_t n);

}  // namespace lowdeg
