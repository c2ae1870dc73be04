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

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lowdeg/field.hpp"
#include "lowdeg/planted.hpp"
#include "lowdeg/rng.hpp"

namespace lowdeg {

enum class NoiseKind { resample, adversarial, wraparound };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::resample;
  double delta = 0.0;
  double beta = 0.0;  // wraparound only

  /// Throws std::invalid_argument for parameters outside [0, 1].
  void validate() const;
};

template <typename T>
struct NoisySample {
  std::vector<T> sample;
  std::vector<std::size_t> resampled;  // increasing coordinate indices
};

/// Resampling operator: each coordinate is kept with probability 1 - delta,
/// otherwise replaced by a fresh draw of `null_coordinate(rng)`.
template <typename T, typename NullCoordinate>
NoisySample<T> t_delta(std::span<const T> x, double delta,
                       NullCoordinate&& null_coordinate, Rng& rng) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("delta must lie in [0, 1]");
  }
  NoisySample<T> out{std::vector<T>(x.begin(), x.end()), {}};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (rng.bernoulli(delta)) {
      out.sample[i] = null_coordinate(rng);
      out.resampled.push_back(i);
    }
  }
  return out;
}

NoisySample<RealSymbol> t_delta(std::span<const RealSymbol> x, double delta,
                                Rng& rng);
NoisySample<FieldElement> t_delta_bits(std::span<const FieldElement> x,
                                       double delta, Rng& rng);

/// floor(delta * n), the adversary's coordinate budget.
std::size_t adversary_budget(std::size_t n, double delta);

class AdversaryBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
struct Corruption {
  std::size_t index;
  T value;
};

/// An adversary sees the full planted sample, including hidden fields.
using Thm1Strategy = std::function<std::vector<Corruption<RealSymbol>>(
    const PlantedSampleThm1&, const TupleLayout&, std::size_t budget)>;
using Thm2Strategy = std::function<std::vector<Corruption<FieldElement>>(
    std::span<const FieldElement> codeword, std::size_t budget)>;

/// Applies the strategy's corruptions. Throws AdversaryBudgetExceeded when
/// more than floor(delta n) distinct coordinates would change.
std::vector<RealSymbol> adversarial_corrupt(const PlantedSampleThm1& sample,
                                            const TupleLayout& layout,
                                            double delta,
                                            const Thm1Strategy& strategy);
Word adversarial_corrupt(std::span<const FieldElement> codeword, double delta,
                         const Thm2Strategy& strategy);

/// Named strategies.
///
/// Real-valued model:
///   "collide"  - re-point unique-index coordinates at another unique index,
///                turning two determined positions into erasures per change.
///   "misplace" - re-point unique-index coordinates at an absent index with
///                a wrong value: one erasure plus one error per change.
/// Binary model:
///   "first-coords" - flip the first floor(delta n) bits.
Thm1Strategy thm1_strategy(std::string_view name);
Thm2Strategy thm2_strategy(std::string_view name);
std::vector<std::string> thm1_strategy_names();
std::vector<std::string> thm2_strategy_names();

/// Per-coordinate wraparound noise: x_i <- frac(x_i + u_i beta) with u_i
/// uniform in [0, 1), in 64-bit fixed point. Throws std::invalid_argument
/// for beta outside [0, 1].
std::vector<RealSymbol> wraparound_noise(std::span<const RealSymbol> x,
                                         double beta, Rng& rng);

}  // namespace lowdeg
