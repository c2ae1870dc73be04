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

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lowdeg/audit.hpp"
#include "lowdeg/planted.hpp"
#include "oracles.hpp"

namespace lowdeg {
namespace {

TEST(Planted, EncodeExamples) {
  const TupleLayout layout(2);
  EXPECT_DOUBLE_EQ(encode_tuple(layout, 3, FieldElement{1}, 0).value(), 0.5625);
  EXPECT_DOUBLE_EQ(encode_tuple(layout, 1, FieldElement{0}, 0).value(), 0.0);
  const DecodedSymbol d = decode_tuple(layout, RealSymbol{0x9000000000000000ull});
  EXPECT_EQ(d.tuple.j, 3u);
  EXPECT_EQ(d.tuple.y, (FieldElement{1}));
  EXPECT_EQ(d.tail, 0u);
}

TEST(Planted, LayoutAndEncodeValidation) {
  EXPECT_THROW(TupleLayout(0), std::invalid_argument);
  EXPECT_THROW(TupleLayout(17), std::invalid_argument);
  const TupleLayout layout(3);
  EXPECT_EQ(layout.n(), 8u);
  EXPECT_EQ(layout.tail_bits(), 58u);
  EXPECT_THROW(encode_tuple(layout, 0, FieldElement{0}, 0), std::out_of_range);
  EXPECT_THROW(encode_tuple(layout, 9, FieldElement{0}, 0), std::out_of_range);
  EXPECT_THROW(encode_tuple(layout, 1, FieldElement{8}, 0), std::out_of_range);
  EXPECT_THROW(encode_tuple(layout, 1, FieldElement{0}, layout.tail_mask() + 1),
               std::invalid_argument);
}

TEST(Planted, RoundTrip) {
  for (unsigned m : {1u, 2u, 10u, 16u}) {
    const TupleLayout layout(m);
    Rng rng(m);
    for (int i = 0; i < 100000; ++i) {
      const auto j = static_cast<std::uint32_t>(1 + rng.below(layout.n()));
      const FieldElement y{static_cast<std::uint32_t>(rng.below(layout.n()))};
      const std::uint64_t tail = rng.next() & layout.tail_mask();
      const DecodedSymbol d = decode_tuple(layout, encode_tuple(layout, j, y, tail));
      ASSERT_EQ(d.tuple.j, j);
      ASSERT_EQ(d.tuple.y, y);
      ASSERT_EQ(d.tail, tail);
    }
  }
}

TEST(Planted, NullTuplesAreUniform) {
  const TupleLayout layout(2);
  Rng rng(11);
  const auto symbols = sample_null_symbols(1000000, rng);
  std::vector<std::uint64_t> cells(16, 0);
  for (const auto& t : decode_tuples(layout, symbols)) ++cells[(t.j - 1) * 4 + t.y.index];
  EXPECT_GT(oracle::chi_square_uniform_pvalue(cells), 1e-3);
}

TEST(Planted, NullBitsAreUnbiased) {
  Rng rng(12);
  const std::size_t draws = 1000000;
  const auto symbols = sample_null_symbols(draws, rng);
  const double sigma = std::sqrt(0.25 / draws);
  for (unsigned bit = 0; bit < 64; ++bit) {
    std::uint64_t ones = 0;
    for (const auto& s : symbols) ones += s.frac >> bit & 1u;
    EXPECT_NEAR(ones / static_cast<double>(draws), 0.5, 3 * sigma) << "bit " << bit;
  }
  const Word bits = sample_null_bits(draws, rng);
  std::uint64_t ones = 0;
  for (auto b : bits) {
    ASSERT_LE(b.index, 1u);
    ones += b.index;
  }
  EXPECT_NEAR(ones / static_cast<double>(draws), 0.5, 3 * sigma);
}

TEST(Planted, HiddenStateIsConsistent) {
  const TupleLayout layout(6);
  const ReedSolomon rs(Field::make(2, 6), 64, 3);
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const PlantedSampleThm1 s = sample_planted_thm1(layout, rs, rng);
    ASSERT_TRUE(rs.code().contains(s.hidden_codeword));
    std::vector<int> occ(65, 0);
    for (auto j : s.hidden_indices) ++occ[j];
    const auto tuples = decode_tuples(layout, s.symbols);
    for (std::size_t i = 0; i < 64; ++i) {
      ASSERT_EQ(tuples[i].j, s.hidden_indices[i]);
      if (occ[tuples[i].j] == 1) {
        ASSERT_EQ(tuples[i].y, s.hidden_codeword[tuples[i].j - 1]);
      }
    }
  }
}

// The sampler's empirical pmf over tuple vectors against full enumeration.
// There are ~6.5e4 outcomes, so at 1e6 draws the sampling noise alone puts
// the total variation near 0.1; we test goodness of fit and compare the TV
// with its expected value under exact sampling.
TEST(Planted, EmpiricalPmfMatchesEnumeration) {
  const ExactPlantedPmf pmf = planted_pmf_exact(2, 1);
  const TupleLayout layout(2);
  const ReedSolomon rs(Field::make(2, 2), 4, 1);
  const std::uint64_t draws = 1000000;
  std::vector<std::uint64_t> counts(pmf.mass.size(), 0);
  Rng rng(14);
  for (std::uint64_t d = 0; d < draws; ++d) {
    const auto s = sample_planted_thm1(layout, rs, rng);
    std::uint64_t index = 0;
    for (const auto& t : decode_tuples(layout, s.symbols)) {
      index = index * pmf.symbols_per_coordinate + (t.j - 1) * 4 + t.y.index;
    }
    ++counts[index];
  }

  double chi2 = 0.0;
  double tv = 0.0;
  double tv_expected = 0.0;
  std::size_t cells = 0;
  for (std::size_t x = 0; x < counts.size(); ++x) {
    const double p = static_cast<double>(pmf.mass[x]) / static_cast<double>(pmf.denominator);
    if (pmf.mass[x] == 0) {
      ASSERT_EQ(counts[x], 0u) << "outcome outside the support";
      continue;
    }
    ++cells;
    const double e = p * draws;
    chi2 += (counts[x] - e) * (counts[x] - e) / e;
    tv += std::abs(counts[x] / static_cast<double>(draws) - p);
    tv_expected += std::sqrt(2 * p * (1 - p) / (std::numbers::pi * draws));
  }
  tv /= 2;
  tv_expected /= 2;
  const boost::math::chi_squared dist(static_cast<double>(cells - 1));
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, chi2)), 1e-3);
  EXPECT_LT(tv, 1.1 * tv_expected);
}

TEST(Planted, Thm2SamplesAreCodewords) {
  const BinaryCodeInstance inst = bch_make(6, 3);
  Rng rng(15);
  for (int t = 0; t < 500; ++t) ASSERT_TRUE(inst.code.contains(sample_planted_thm2(inst, rng)));
}

TEST(Planted, DumpRoundTrip) {
  Rng rng(16);
  const auto symbols = sample_null_symbols(100, rng);
  std::stringstream ss;
  write_dump(ss, symbols);
  EXPECT_EQ(read_symbol_dump(ss), symbols);

  const Word bits = sample_null_bits(100, rng);
  std::stringstream sb;
  write_dump(sb, std::span<const FieldElement>(bits));
  EXPECT_EQ(read_bit_dump(sb), bits);

  std::stringstream bad("12345\n");
  EXPECT_THROW(read_symbol_dump(bad), std::runtime_error);
  std::stringstream badbits("2\n");
  EXPECT_THROW(read_bit_dump(badbits), std::runtime_error);
}

}  // namespace
}  // namespace lowdeg
