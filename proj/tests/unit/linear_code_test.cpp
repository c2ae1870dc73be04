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

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "lowdeg/bch.hpp"
#include "lowdeg/code_io.hpp"
#include "lowdeg/linear_code.hpp"
#include "lowdeg/reed_solomon.hpp"
#include "oracles.hpp"

namespace lowdeg {
namespace {

LinearCode repetition3() {
  Matrix g(1, 3);
  for (std::size_t j = 0; j < 3; ++j) g(0, j) = Field::one();
  return LinearCode(Field::make(2, 1), 3, g);
}

void expect_orthogonal(const LinearCode& c) {
  const Field& f = c.field();
  const Matrix& g = c.generator();
  const Matrix& h = c.parity_check();
  ASSERT_EQ(h.rows(), c.length() - c.dimension());
  for (std::size_t a = 0; a < g.rows(); ++a) {
    for (std::size_t b = 0; b < h.rows(); ++b) {
      FieldElement dot = Field::zero();
      for (std::size_t j = 0; j < c.length(); ++j) dot = f.add(dot, f.mul(g(a, j), h(b, j)));
      ASSERT_EQ(dot, Field::zero());
    }
  }
  EXPECT_EQ(rank(f, g), c.dimension());
  EXPECT_EQ(rank(f, h), c.length() - c.dimension());
}

std::set<Word> as_set(const std::vector<Word>& words) {
  return {words.begin(), words.end()};
}

TEST(LinearCode, EncodeZeroAndRepetition) {
  const LinearCode rep = repetition3();
  EXPECT_EQ(rep.encode(std::vector<FieldElement>{Field::zero()}), Word(3, Field::zero()));
  EXPECT_EQ(rep.encode(std::vector<FieldElement>{Field::one()}), Word(3, Field::one()));
  EXPECT_THROW(rep.encode(std::vector<FieldElement>{}), std::invalid_argument);
}

TEST(LinearCode, RejectsDependentRows) {
  Matrix g(2, 3);
  g(0, 0) = g(1, 0) = Field::one();
  EXPECT_THROW(LinearCode(Field::make(2, 1), 3, g), std::invalid_argument);
}

TEST(LinearCode, GeneratorIsOrthogonalToParityCheckOnEveryPath) {
  const Field gf8 = Field::make(2, 3);
  const ReedSolomon rs(gf8, 8, 2);
  expect_orthogonal(repetition3());
  expect_orthogonal(dual_code(repetition3()));
  expect_orthogonal(rs.code());
  expect_orthogonal(dual_code(rs.code()));
  expect_orthogonal(bch_make(6, 3).code);
  expect_orthogonal(ReedSolomon(Field::make(3, 2), 9, 4).code());
}

TEST(LinearCode, EncodedRsWordsPassParityCheck) {
  const ReedSolomon rs(Field::make(2, 3), 8, 2);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    std::vector<FieldElement> msg(3);
    for (auto& x : msg) x = FieldElement{static_cast<std::uint32_t>(rng.below(8))};
    const Word c = rs.code().encode(msg);
    EXPECT_TRUE(rs.code().contains(c));
    EXPECT_EQ(rs.code().syndrome(c), Word(5, Field::zero()));
  }
}

TEST(LinearCode, ContainsRejectsNonCodewords) {
  const LinearCode rep = repetition3();
  EXPECT_FALSE(rep.contains(Word{{1}, {0}, {1}}));
  EXPECT_TRUE(rep.contains(Word{{1}, {1}, {1}}));
}

TEST(LinearCode, SampleCodewordOnZeroDimensionalCode) {
  const LinearCode zero(Field::make(2, 2), 4, Matrix(0, 4));
  Rng rng(1);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(zero.sample_codeword(rng), Word(4, Field::zero()));
}

TEST(LinearCode, SampleCodewordRepetitionFrequency) {
  const LinearCode rep = repetition3();
  Rng rng(2);
  int zeros = 0;
  for (int i = 0; i < 10000; ++i) zeros += rep.sample_codeword(rng)[0] == Field::zero();
  EXPECT_NEAR(zeros / 10000.0, 0.5, 0.02);
}

TEST(LinearCode, SampleCodewordUniformOverRs41) {
  const ReedSolomon rs(Field::make(2, 2), 4, 1);
  const auto book = oracle::codebook(rs.code());
  ASSERT_EQ(book.size(), 16u);
  std::map<Word, std::uint64_t> index;
  for (std::size_t i = 0; i < book.size(); ++i) index[book[i]] = i;
  std::vector<std::uint64_t> counts(16, 0);
  Rng rng(3);
  for (int i = 0; i < 100000; ++i) {
    const Word c = rs.code().sample_codeword(rng);
    ASSERT_TRUE(index.count(c));
    ++counts[index[c]];
  }
  for (auto c : counts) EXPECT_NEAR(c / 100000.0, 1.0 / 16, 0.01);
  EXPECT_GT(oracle::chi_square_uniform_pvalue(counts), 1e-3);
}

TEST(LinearCode, DualOfRepetitionIsEvenWeightCode) {
  const LinearCode dual = dual_code(repetition3());
  EXPECT_EQ(dual.dimension(), 2u);
  for (const Word& w : oracle::codebook(dual)) EXPECT_EQ(hamming_weight(w) % 2, 0u);
}

TEST(LinearCode, DoubleDualIsOriginal) {
  const ReedSolomon rs(Field::make(2, 3), 8, 2);
  EXPECT_TRUE(same_code(dual_code(dual_code(rs.code())), rs.code()));
  EXPECT_EQ(as_set(oracle::codebook(dual_code(dual_code(rs.code())))),
            as_set(oracle::codebook(rs.code())));
}

TEST(LinearCode, DualOfRs82IsRs84AsSets) {
  const Field f = Field::make(2, 3);
  const LinearCode dual = dual_code(ReedSolomon(f, 8, 2).code());
  const LinearCode rs84 = ReedSolomon(f, 8, 4).code();
  // With n = q every field element is an evaluation point, so the dual is
  // again a plain RS code.
  EXPECT_EQ(dual.dimension(), rs84.dimension());
  EXPECT_EQ(min_weight_bruteforce(dual), min_weight_bruteforce(rs84));
  EXPECT_EQ(as_set(oracle::codebook(dual)), as_set(oracle::codebook(rs84)));
  EXPECT_TRUE(same_code(dual, rs84));
}

TEST(LinearCode, MinWeightBruteforce) {
  EXPECT_EQ(min_weight_bruteforce(repetition3()), 3u);
  const Field f = Field::make(2, 3);
  EXPECT_EQ(min_weight_bruteforce(dual_code(ReedSolomon(f, 8, 2).code())), 4u);
  // Oracle: minimum over the naive codebook.
  const LinearCode c = ReedSolomon(Field::make(3, 2), 9, 3).code();
  std::size_t best = 100;
  for (const Word& w : oracle::codebook(c)) {
    const std::size_t wt = hamming_weight(w);
    if (wt > 0) best = std::min(best, wt);
  }
  EXPECT_EQ(min_weight_bruteforce(c), best);
}

TEST(LinearCode, MinWeightRefusesOverBudget) {
  const ReedSolomon rs(Field::make(2, 8), 255, 10);
  EXPECT_THROW(min_weight_bruteforce(rs.code()), BudgetExceeded);
  EXPECT_THROW(min_weight_bruteforce(repetition3(), 1), BudgetExceeded);
}

TEST(LinearCode, BchDualMinWeightAtLeastSixteen) {
  const BinaryCodeInstance inst = bch_make(6, 3);
  const std::size_t d = min_weight_bruteforce(dual_code(inst.code));
  EXPECT_GE(d, 16u);
  EXPECT_EQ(d, inst.dual_lb);
}

TEST(LinearCode, SubsetRankUniformBasics) {
  const LinearCode rep = repetition3();
  EXPECT_TRUE(subset_rank_uniform(rep, std::vector<std::size_t>{}));
  EXPECT_TRUE(subset_rank_uniform(rep, std::vector<std::size_t>{1}));
  EXPECT_FALSE(subset_rank_uniform(rep, std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(subset_rank_uniform(rep, std::vector<std::size_t>{3}), std::out_of_range);
}

// Rank criterion against pattern counting over the enumerated codebook.
TEST(LinearCode, RankCriterionMatchesEnumerationOnRs82) {
  const LinearCode c = ReedSolomon(Field::make(2, 3), 8, 2).code();
  const auto book = oracle::codebook(c);
  for (std::uint32_t mask = 1; mask < 256; ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < 8; ++j) {
      if (mask >> j & 1) s.push_back(j);
    }
    std::map<Word, std::uint64_t> counts;
    for (const Word& w : book) {
      Word key;
      for (auto j : s) key.push_back(w[j]);
      ++counts[key];
    }
    std::uint64_t patterns = 1;
    for (std::size_t i = 0; i < s.size(); ++i) patterns *= 8;
    const bool uniform =
        counts.size() == patterns &&
        std::all_of(counts.begin(), counts.end(),
                    [&](const auto& kv) { return kv.second * patterns == book.size(); });
    ASSERT_EQ(subset_rank_uniform(c, s), uniform) << "mask " << mask;
    if (s.size() <= 3) {
      ASSERT_TRUE(uniform);
    }
  }
}

// Dual distance d: every subset of size <= d-1 is uniform, some subset of
// size d is not.
TEST(LinearCode, DualDistanceGivesExactIndependence) {
  for (const LinearCode& c : {ReedSolomon(Field::make(2, 3), 8, 2).code(),
                              ReedSolomon(Field::make(2, 2), 4, 1).code(),
                              bch_make(4, 2).code}) {
    const std::size_t d = min_weight_bruteforce(dual_code(c));
    const std::size_t n = c.length();
    bool found_dependent = false;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask >> j & 1) s.push_back(j);
      }
      if (s.size() < d) {
        ASSERT_TRUE(subset_rank_uniform(c, s));
      }
      if (s.size() == d && !subset_rank_uniform(c, s)) found_dependent = true;
    }
    EXPECT_TRUE(found_dependent);
  }
}

TEST(LinearCode, ForEachCodewordMatchesNaiveEnumeration) {
  const LinearCode c = ReedSolomon(Field::make(3, 1), 3, 1).code();
  std::vector<Word> seen;
  for_each_codeword(c, [&](std::span<const FieldElement> w) { seen.emplace_back(w.begin(), w.end()); });
  EXPECT_EQ(as_set(seen), as_set(oracle::codebook(c)));
  EXPECT_EQ(seen.size(), codebook_size(c));
}

TEST(LinearCode, HammingHelpers) {
  const Word a{{0}, {1}, {2}, {0}};
  const Word b{{0}, {2}, {2}, {1}};
  EXPECT_EQ(hamming_weight(a), 2u);
  EXPECT_EQ(hamming_distance(a, b), 2u);
}

TEST(CodeIo, RoundTripAndErrors) {
  const LinearCode c = ReedSolomon(Field::make(2, 3), 8, 2).code();
  std::stringstream s;
  write_code(s, c);
  const LinearCode back = read_code(s);
  EXPECT_EQ(back.generator(), c.generator());
  EXPECT_EQ(back.field().order(), 8u);

  std::istringstream comments("# header\n\n2 3 1\n1 1 1\n");
  EXPECT_EQ(read_code(comments).length(), 3u);
  std::istringstream truncated("2 3 2\n1 1 1\n");
  EXPECT_THROW(read_code(truncated), std::runtime_error);
  std::istringstream bad_element("2 3 1\n1 2 1\n");
  EXPECT_THROW(read_code(bad_element), std::exception);

  const auto path = std::filesystem::temp_directory_path() / "lowdeg_code_io_test.txt";
  save_code(path.string(), c);
  EXPECT_EQ(load_code(path.string()).generator(), c.generator());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace lowdeg
