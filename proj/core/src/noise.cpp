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

#include "lowdeg/noise.hpp"

#include <algorithm>
#include <set>

#include "lowdeg/stats.hpp"

namespace lowdeg {

namespace {

__extension__ typedef unsigned __int128 u128;

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

template <typename T>
std::vector<T> apply_corruptions(std::span<const T> base,
                                 const std::vector<Corruption<T>>& changes,
                                 std::size_t budget) {
  std::vector<T> out(base.begin(), base.end());
  for (const auto& c : changes) {
    if (c.index >= out.size()) {
      throw std::out_of_range("adversary touched coordinate " +
                              std::to_string(c.index) + " outside the sample");
    }
    out[c.index] = c.value;
  }
  std::size_t changed = 0;
  for (std::size_t i = 0; i < out.size(); ++i) changed += out[i] != base[i];
  if (changed > budget) {
    throw AdversaryBudgetExceeded("adversary changed " + std::to_string(changed) +
                                  " coordinates, budget is " +
                                  std::to_string(budget));
  }
  return out;
}

std::vector<std::size_t> unique_coordinates(const PlantedSampleThm1& s,
                                            std::vector<std::uint32_t>& occ) {
  occ.assign(s.hidden_indices.size() + 1, 0);
  for (std::uint32_t j : s.hidden_indices) ++occ[j];
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.hidden_indices.size(); ++i) {
    if (occ[s.hidden_indices[i]] == 1) out.push_back(i);
  }
  return out;
}

std::vector<Corruption<RealSymbol>> collide(const PlantedSampleThm1& s,
                                            const TupleLayout& layout,
                                            std::size_t budget) {
  std::vector<std::uint32_t> occ;
  const auto unique = unique_coordinates(s, occ);
  std::vector<Corruption<RealSymbol>> out;
  for (std::size_t a = 0; a < budget && 2 * a + 1 < unique.size(); ++a) {
    const std::size_t victim = unique[2 * a];
    const std::size_t partner = unique[2 * a + 1];
    const DecodedSymbol d = decode_tuple(layout, s.symbols[victim]);
    out.push_back({victim, encode_tuple(layout, s.hidden_indices[partner],
                                        d.tuple.y, d.tail)});
  }
  return out;
}

std::vector<Corruption<RealSymbol>> misplace(const PlantedSampleThm1& s,
                                             const TupleLayout& layout,
                                             std::size_t budget) {
  std::vector<std::uint32_t> occ;
  const auto unique = unique_coordinates(s, occ);
  std::vector<std::uint32_t> absent;
  for (std::uint32_t j = 1; j < occ.size(); ++j) {
    if (occ[j] == 0) absent.push_back(j);
  }
  std::vector<Corruption<RealSymbol>> out;
  const std::size_t count = std::min({budget, unique.size(), absent.size()});
  for (std::size_t a = 0; a < count; ++a) {
    const std::size_t victim = unique[a];
    const std::uint32_t target = absent[a];
    const DecodedSymbol d = decode_tuple(layout, s.symbols[victim]);
    const FieldElement wrong{s.hidden_codeword[target - 1].index ^ 1u};
    out.push_back({victim, encode_tuple(layout, target, wrong, d.tail)});
  }
  return out;
}

std::vector<Corruption<FieldElement>> first_coords(
    std::span<const FieldElement> codeword, std::size_t budget) {
  std::vector<Corruption<FieldElement>> out;
  for (std::size_t i = 0; i < std::min(budget, codeword.size()); ++i) {
    out.push_back({i, FieldElement{codeword[i].index ^ 1u}});
  }
  return out;
}

}  // namespace

void NoiseSpec::validate() const {
  if (!in_unit_interval(delta)) throw std::invalid_argument("delta must lie in [0, 1]");
  if (!in_unit_interval(beta)) throw std::invalid_argument("beta must lie in [0, 1]");
}

NoisySample<RealSymbol> t_delta(std::span<const RealSymbol> x, double delta,
                                Rng& rng) {
  return t_delta<RealSymbol>(
      x, delta, [](Rng& r) { return RealSymbol{r.next()}; }, rng);
}

NoisySample<FieldElement> t_delta_bits(std::span<const FieldElement> x,
                                       double delta, Rng& rng) {
  return t_delta<FieldElement>(
      x, delta,
      [](Rng& r) { return FieldElement{static_cast<std::uint32_t>(r.next() >> 63)}; },
      rng);
}

std::size_t adversary_budget(std::size_t n, double delta) {
  if (!in_unit_interval(delta)) throw std::invalid_argument("delta must lie in [0, 1]");
  return floor_scaled(delta, n);
}

std::vector<RealSymbol> adversarial_corrupt(const PlantedSampleThm1& sample,
                                            const TupleLayout& layout,
                                            double delta,
                                            const Thm1Strategy& strategy) {
  const std::size_t budget = adversary_budget(sample.symbols.size(), delta);
  return apply_corruptions<RealSymbol>(sample.symbols,
                                       strategy(sample, layout, budget), budget);
}

Word adversarial_corrupt(std::span<const FieldElement> codeword, double delta,
                         const Thm2Strategy& strategy) {
  const std::size_t budget = adversary_budget(codeword.size(), delta);
  return apply_corruptions<FieldElement>(codeword, strategy(codeword, budget),
                                         budget);
}

Thm1Strategy thm1_strategy(std::string_view name) {
  if (name == "collide") return collide;
  if (name == "misplace") return misplace;
  throw std::invalid_argument("unknown real-valued adversary strategy '" +
                              std::string(name) + "'");
}

Thm2Strategy thm2_strategy(std::string_view name) {
  if (name == "first-coords") return first_coords;
  throw std::invalid_argument("unknown binary adversary strategy '" +
                              std::string(name) + "'");
}

std::vector<std::string> thm1_strategy_names() { return {"collide", "misplace"}; }
std::vector<std::string> thm2_strategy_names() { return {"first-coords"}; }

std::vector<RealSymbol> wraparound_noise(std::span<const RealSymbol> x,
                                         double beta, Rng& rng) {
  if (!in_unit_interval(beta)) throw std::invalid_argument("beta must lie in [0, 1]");
  std::vector<RealSymbol> out(x.begin(), x.end());
  // shift = floor(u * beta) in units of 2^-64, u uniform on 64 bits.
  const bool full = beta >= 1.0;
  const auto scale =
      full ? std::uint64_t{0} : static_cast<std::uint64_t>(std::ldexp(beta, 64));
  for (auto& s : out) {
    const std::uint64_t u = rng.next();
    const std::uint64_t shift =
        full ? u : static_cast<std::uint64_t>((static_cast<u128>(u) * scale) >> 64);
    s.frac += shift;
  }
  return out;
}

}  // namespace lowdeg
