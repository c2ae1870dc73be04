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

#include <gtest/gtest.h>

#include <cmath>

#include "lowdeg/distinguishers.hpp"
#include "lowdeg/noise.hpp"

namespace lowdeg {
namespace {

TEST(Noise, ZeroDeltaIsIdentity) {
  Rng rng(1);
  const auto x = sample_null_symbols(1000, rng);
  const auto out = t_delta(std::span<const RealSymbol>(x), 0.0, rng);
  EXPECT_EQ(out.sample, x);
  EXPECT_TRUE(out.resampled.empty());
}

TEST(Noise, UnitDeltaResamplesEverything) {
  Rng rng(2);
  const std::vector<RealSymbol> x(1000, RealSymbol{0});
  const auto out = t_delta(std::span<const RealSymbol>(x), 1.0, rng);
  EXPECT_EQ(out.resampled.size(), 1000u);
  std::size_t unchanged = 0;
  for (const auto& s : out.sample) unchanged += s.frac == 0;
  EXPECT_EQ(unchanged, 0u);
}

TEST(Noise, ResampledCountIsBinomial) {
  Rng rng(3);
  const std::vector<FieldElement> x(10000, FieldElement{0});
  const int reps = 200;
  double sum = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto out = t_delta_bits(x, 0.1, rng);
    for (std::size_t i = 1; i < out.resampled.size(); ++i) {
      ASSERT_LT(out.resampled[i - 1], out.resampled[i]);
    }
    sum += static_cast<double>(out.resampled.size());
  }
  // Each count has mean 1000 and variance 900.
  EXPECT_NEAR(sum / reps, 1000.0, 3 * std::sqrt(900.0 / reps));
}

TEST(Noise, RejectsDeltaOutsideUnitInterval) {
  Rng rng(4);
  const std::vector<FieldElement> x(4);
  EXPECT_THROW(t_delta_bits(x, -0.1, rng), std::invalid_argument);
  EXPECT_THROW(t_delta_bits(x, 1.5, rng), std::invalid_argument);
  NoiseSpec spec;
  spec.delta = 0.5;
  spec.validate();
  spec.beta = 2.0;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

// Applying T_delta to a null sample leaves it null: top bits stay fair and
// pairwise independent.
TEST(Noise, NullIsStationary) {
  Rng rng(5);
  const int draws = 200000;
  std::uint64_t first = 0;
  std::uint64_t both = 0;
  for (int d = 0; d < draws; ++d) {
    const auto x = sample_null_symbols(2, rng);
    const auto y = t_delta(std::span<const RealSymbol>(x), 0.3, rng).sample;
    const unsigned a = y[0].frac >> 63;
    const unsigned b = y[1].frac >> 63;
    first += a;
    both += a & b;
  }
  EXPECT_NEAR(first / static_cast<double>(draws), 0.5, 3 * std::sqrt(0.25 / draws));
  EXPECT_NEAR(both / static_cast<double>(draws), 0.25, 3 * std::sqrt(0.1875 / draws));
}

TEST(Noise, BudgetIsFloorOfDeltaN) {
  EXPECT_EQ(adversary_budget(1024, 0.0035), 3u);
  EXPECT_EQ(adversary_budget(255, 0.0059), 1u);
  EXPECT_EQ(adversary_budget(100, 0.29), 29u);
  EXPECT_EQ(adversary_budget(10, 0.0), 0u);
}

TEST(Noise, ZeroBudgetAdversaryIsIdentity) {
  const BinaryCodeInstance inst = bch_make(6, 3);
  Rng rng(6);
  const Word c = sample_planted_thm2(inst, rng);
  EXPECT_EQ(adversarial_corrupt(c, 0.01, thm2_strategy("first-coords")), c);
}

TEST(Noise, FirstCoordsFlipsExactlyTheBudget) {
  const BinaryCodeInstance inst = bch_make(8, 6);
  Rng rng(7);
  for (double delta : {0.0059, 0.02, 0.1}) {
    const Word c = sample_planted_thm2(inst, rng);
    const Word y = adversarial_corrupt(c, delta, thm2_strategy("first-coords"));
    EXPECT_EQ(hamming_distance(c, y), adversary_budget(255, delta));
  }
}

TEST(Noise, CollideRemovesUniqueIndices) {
  const TupleLayout layout(10);
  const ReedSolomon rs(Field::make(2, 10), 1024, 52);
  Rng rng(8);
  const std::size_t budget = adversary_budget(1024, 0.0035);
  for (int t = 0; t < 50; ++t) {
    const auto s = sample_planted_thm1(layout, rs, rng);
    const auto clean = unique_index_assembly(decode_tuples(layout, s.symbols), 1024);
    for (const auto& name : thm1_strategy_names()) {
      const auto y = adversarial_corrupt(s, layout, 0.0035, thm1_strategy(name));
      std::size_t changed = 0;
      for (std::size_t i = 0; i < y.size(); ++i) changed += y[i] != s.symbols[i];
      ASSERT_LE(changed, budget);
      const auto noisy = unique_index_assembly(decode_tuples(layout, y), 1024);
      if (name == "collide") {
        ASSERT_LE(noisy.erasure_count(), clean.erasure_count() + 2 * budget);
        ASSERT_GE(noisy.erasure_count(), clean.erasure_count());
      }
    }
  }
}

TEST(Noise, BudgetOverrunThrows) {
  const Thm2Strategy greedy = [](std::span<const FieldElement> c, std::size_t budget) {
    std::vector<Corruption<FieldElement>> out;
    for (std::size_t i = 0; i <= budget && i < c.size(); ++i) {
      out.push_back({i, FieldElement{c[i].index ^ 1u}});
    }
    return out;
  };
  const Word c(64, FieldElement{0});
  EXPECT_THROW(adversarial_corrupt(c, 0.05, greedy), AdversaryBudgetExceeded);
  const Thm2Strategy outside = [](std::span<const FieldElement> c, std::size_t) {
    return std::vector<Corruption<FieldElement>>{{c.size(), FieldElement{1}}};
  };
  EXPECT_THROW(adversarial_corrupt(c, 0.05, outside), std::out_of_range);
}

TEST(Noise, StrategyLookup) {
  EXPECT_EQ(thm1_strategy_names(), (std::vector<std::string>{"collide", "misplace"}));
  EXPECT_EQ(thm2_strategy_names(), (std::vector<std::string>{"first-coords"}));
  EXPECT_THROW(thm1_strategy("first-coords"), std::invalid_argument);
  EXPECT_THROW(thm2_strategy("nope"), std::invalid_argument);
}

TEST(Noise, WraparoundZeroIsIdentity) {
  Rng rng(9);
  const auto x = sample_null_symbols(1000, rng);
  EXPECT_EQ(wraparound_noise(x, 0.0, rng), x);
  EXPECT_THROW(wraparound_noise(x, -0.5, rng), std::invalid_argument);
}

// At beta = 1/2 the top bit survives about half the time while the full
// 10-bit index survives with probability about 2^-10.
TEST(Noise, WraparoundHalfMixesIndex) {
  const TupleLayout layout(10);
  Rng rng(10);
  const int draws = 100000;
  const auto x = sample_null_symbols(draws, rng);
  const auto y = wraparound_noise(x, 0.5, rng);
  int top = 0;
  int index = 0;
  for (int i = 0; i < draws; ++i) {
    top += (x[i].frac >> 63) == (y[i].frac >> 63);
    index += decode_tuple(layout, x[i]).tuple.j == decode_tuple(layout, y[i]).tuple.j;
  }
  EXPECT_NEAR(top / static_cast<double>(draws), 0.5, 3 * std::sqrt(0.25 / draws));
  const double p = 1.0 / 1024;
  EXPECT_NEAR(index / static_cast<double>(draws), p, 3 * std::sqrt(p * (1 - p) / draws));
}

TEST(Noise, WraparoundFullIsUniform) {
  Rng rng(11);
  const int draws = 100000;
  const std::vector<RealSymbol> x(draws, RealSymbol{0x123456789abcdefull});
  const auto y = wraparound_noise(x, 1.0, rng);
  int top = 0;
  for (const auto& s : y) top += s.frac >> 63;
  EXPECT_NEAR(top / static_cast<double>(draws), 0.5, 3 * std::sqrt(0.25 / draws));
}

}  // namespace
}  // namespace lowdeg
