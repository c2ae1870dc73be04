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
#include <numbers>
#include <numeric>

#include "lowdeg/audit.hpp"
#include "oracles.hpp"

namespace lowdeg {
namespace {

std::uint32_t u32(std::uint64_t x) { return static_cast<std::uint32_t>(x); }

// Unique-index count over all n^n index vectors.
std::pair<double, double> unique_moments_enumerated(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t v = 0; v < total; ++v) {
    const auto j = oracle::digits(u32(v), u32(n), u32(n));
    std::vector<int> occ(n, 0);
    for (auto x : j) ++occ[x];
    double u = 0;
    for (auto c : occ) u += c == 1;
    sum += u;
    sum_sq += u * u;
  }
  const double mean = sum / static_cast<double>(total);
  return {mean, sum_sq / static_cast<double>(total) - mean * mean};
}

TEST(UniqueIndex, AnalyticMoments) {
  EXPECT_DOUBLE_EQ(unique_mean_analytic(1), 1.0);
  EXPECT_DOUBLE_EQ(unique_mean_analytic(2), 1.0);
  EXPECT_NEAR(unique_mean_analytic(1000000) / 1e6, 1 / std::numbers::e, 1e-6);
  EXPECT_NEAR(unique_variance_analytic(2), 1.0, 1e-12);
  for (std::size_t n : {2u, 3u, 4u, 5u, 6u}) {
    const auto [mean, var] = unique_moments_enumerated(n);
    EXPECT_NEAR(unique_mean_analytic(n), mean, 1e-12) << n;
    EXPECT_NEAR(unique_variance_analytic(n), var, 1e-12) << n;
  }
}

TEST(UniqueIndex, MonteCarlo) {
  const AuditReport big = unique_count_montecarlo(100000, 100, 1.0 / 3, 1);
  EXPECT_EQ(big.pass, true);
  EXPECT_NEAR(big.observed, 0.3679, 0.003);
  const AuditReport one = unique_count_montecarlo(1, 10, 1.0 / 3, 2);
  EXPECT_DOUBLE_EQ(one.observed, 1.0);
  const AuditReport two = unique_count_montecarlo(2, 100000, 0.0, 3);
  EXPECT_NEAR(two.observed, 0.5, 0.01);
  EXPECT_FALSE(unique_count_montecarlo(10, 0, 0.0, 4).pass.has_value());
}

TEST(UniqueIndex, ThreadCountDoesNotChangeResult) {
  const AuditReport a = unique_count_montecarlo(4096, 64, 1.0 / 3, 5, 1);
  const AuditReport b = unique_count_montecarlo(4096, 64, 1.0 / 3, 5, 4);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(ErasureFraction, AnalyticRateAndAudit) {
  const double rate = erasure_fraction_rate_analytic(1024);
  EXPECT_GT(rate, 0.985);
  EXPECT_LT(rate, 0.992);
  EXPECT_EQ(erasure_fraction_audit(1024, 1000, 1).pass, true);
}

// Brute-force count of the words within distance r of zero.
std::uint64_t ball_enumerated(std::size_t len, std::size_t r, std::uint64_t q) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= q;
  std::uint64_t count = 0;
  for (std::uint64_t v = 0; v < total; ++v) {
    std::size_t w = 0;
    for (auto d : oracle::digits(u32(v), u32(q), u32(len))) w += d != 0;
    count += w <= r;
  }
  return count;
}

TEST(BallSize, Examples) {
  const BallSize a = ball_size(4, 0, 1, 2);
  EXPECT_EQ(a.exact, "5");
  EXPECT_EQ(a.lower, "4");
  EXPECT_EQ(a.upper, "8");
  EXPECT_TRUE(a.within);

  const BallSize zero = ball_size(10, 3, 0, 7);
  EXPECT_EQ(zero.exact, "1");
  EXPECT_EQ(zero.lower, "1");
  EXPECT_EQ(zero.upper, "1");

  const BallSize b = ball_size(8, 2, 2, 8);
  EXPECT_EQ(b.exact, "778");
  EXPECT_EQ(b.lower, "735");
  EXPECT_EQ(b.upper, "2205");
  EXPECT_TRUE(b.within);
  EXPECT_TRUE(b.monotone_regime);

  // Outside the monotone regime the upper bound can fail.
  const BallSize c = ball_size(4, 0, 4, 2);
  EXPECT_EQ(c.exact, "16");
  EXPECT_EQ(c.upper, "5");
  EXPECT_FALSE(c.within);
  EXPECT_FALSE(c.monotone_regime);
}

TEST(BallSize, MatchesEnumeration) {
  for (std::uint64_t q : {2u, 3u, 5u}) {
    for (std::size_t len = 1; len <= 6; ++len) {
      for (std::size_t r = 0; r <= len; ++r) {
        EXPECT_EQ(ball_size(len + 1, 1, r, q).exact, std::to_string(ball_enumerated(len, r, q)))
            << "q=" << q << " len=" << len << " r=" << r;
      }
    }
  }
}

TEST(BallSize, AuditPasses) { EXPECT_EQ(ball_size_audit(1000, 7).pass, true); }

TEST(RandFar, Rs82ZeroRadiusClosedForm) {
  const ReedSolomon rs(Field::make(2, 3), 8, 2);
  // Exact counting: 512 codewords, each its own radius-0 ball, over 8^8 words.
  EXPECT_EQ(oracle::codebook(rs.code()).size(), 512u);
  RandFarSetup setup;
  setup.code = &rs.code();
  setup.radius = 0;
  setup.min_distance = 7;
  setup.trials = 10000;
  setup.seed = 1;
  const AuditReport r = rand_far_audit(setup);
  EXPECT_DOUBLE_EQ(r.expected, std::pow(8.0, -5));
  EXPECT_EQ(r.parameters["method"], "exhaustive");
}

TEST(RandFar, Bch63DecoderPath) {
  const BinaryCodeInstance inst = bch_make(6, 3);
  RandFarSetup setup;
  setup.code = &inst.code;
  setup.radius = 1;
  setup.min_distance = 7;
  setup.trials = 100000;
  setup.seed = 2;
  setup.decoder = [&](const ReceivedWord& w) -> std::optional<Word> {
    Word bits(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) bits[i] = w.value(i);
    return bch_decode(inst, bits);
  };
  const AuditReport r = rand_far_audit(setup);
  EXPECT_EQ(r.pass, true);
  EXPECT_DOUBLE_EQ(r.expected, std::ldexp(64.0, 45 - 63));
}

TEST(RandFar, NotApplicableCases) {
  const ReedSolomon rs(Field::make(2, 3), 8, 2);
  RandFarSetup setup;
  setup.code = &rs.code();
  setup.min_distance = 7;
  EXPECT_FALSE(rand_far_audit(setup).pass.has_value());  // zero trials
  setup.trials = 10;
  setup.radius = 2;  // 4r >= d
  EXPECT_FALSE(rand_far_audit(setup).pass.has_value());
}

TEST(Kwise, Examples) {
  const ReedSolomon rs(Field::make(2, 3), 8, 2);
  const AuditReport ok = kwise_audit(rs.code(), 3, KwiseMode::exhaustive);
  EXPECT_EQ(ok.pass, true);
  EXPECT_EQ(ok.parameters["subsets"], 8u + 28u + 56u);
  EXPECT_FALSE(ok.parameters.contains("criterion_disagreement"));

  EXPECT_EQ(kwise_audit(rs.code(), 0, KwiseMode::exhaustive).pass, true);

  const AuditReport too_far = kwise_audit(rs.code(), 4, KwiseMode::exhaustive);
  EXPECT_EQ(too_far.pass, false);
  EXPECT_TRUE(too_far.parameters.contains("first_failure"));
  EXPECT_FALSE(too_far.parameters.contains("criterion_disagreement"));
}

TEST(Kwise, BchSampled) {
  const BinaryCodeInstance inst = bch_make(6, 3);
  const AuditReport r =
      kwise_audit(inst.code, inst.dual_lb - 1, KwiseMode::sampled, 10000, 3);
  EXPECT_EQ(r.pass, true);
}

TEST(ExactPmf, NormalizedAndPermutationInvariant) {
  const ExactPlantedPmf pmf = planted_pmf_exact(2, 1);
  const std::uint64_t total =
      std::accumulate(pmf.mass.begin(), pmf.mass.end(), std::uint64_t{0});
  EXPECT_EQ(total, pmf.denominator);
  EXPECT_EQ(pmf.mass.size(), 65536u);

  const ExactPlantedPmf small = planted_pmf_exact(1, 0);
  EXPECT_EQ(std::accumulate(small.mass.begin(), small.mass.end(), std::uint64_t{0}),
            small.denominator);

  const AuditReport r = sn_invariance_exact();
  EXPECT_EQ(r.pass, true);
  EXPECT_EQ(r.parameters["permutations"], 24u);
  EXPECT_THROW(planted_pmf_exact(3, 1), std::invalid_argument);
}

TEST(ExactPmf, TupleIndependence) {
  EXPECT_EQ(tuple_kwise_exact(1).pass, true);
  EXPECT_EQ(tuple_kwise_exact(2).pass, true);
  // Beyond k + 1 the property is not guaranteed; reported, not judged.
  EXPECT_FALSE(tuple_kwise_exact(3).pass.has_value());
}

TEST(DualDistance, Audits) {
  const Field f = Field::make(2, 3);
  EXPECT_EQ(rs_dual_distance_audit(ReedSolomon(f, 8, 2)).observed, 4.0);
  EXPECT_EQ(rs_dual_distance_audit(ReedSolomon(f, 8, 4)).observed, 6.0);
  EXPECT_EQ(rs_dual_distance_audit(ReedSolomon(f, 8, 4)).pass, true);
  const AuditReport b = bch_dual_distance_audit(bch_make(6, 3));
  EXPECT_EQ(b.pass, true);
  EXPECT_GE(b.observed, 16.0);
}

TEST(AuditReport, JsonShape) {
  AuditReport r;
  r.name = "x";
  r.observed = 1.5;
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"name", "parameters", "observed", "expected",
                                            "tolerance", "pass"}));
  EXPECT_TRUE(j["pass"].is_null());
  r.pass = true;
  EXPECT_EQ(to_json(r)["pass"], true);
}

}  // namespace
}  // namespace lowdeg
