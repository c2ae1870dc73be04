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

// Quantitative checks of the probabilistic building blocks: unique-index statistics,
// random-word distance, ball sizes, k-wise independence and exact
// permutation invariance of the small planted distribution.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lowdeg/bch.hpp"
#include "lowdeg/linear_code.hpp"
#include "lowdeg/received_word.hpp"
#include "lowdeg/reed_solomon.hpp"

namespace lowdeg {

struct AuditReport {
  std::string name;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  /// nullopt when the audit's preconditions do not hold (not applicable).
  std::optional<bool> pass;
};

nlohmann::ordered_json to_json(const AuditReport& report);

/// n (1 - 1/n)^(n-1): expected number of values in [n] hit exactly once by
/// n uniform draws.
double unique_mean_analytic(std::size_t n);

/// Variance of that count, from the pairwise term
/// E[X_a X_b] = n(n-1) (1/n)^2 (1 - 2/n)^(n-2).
double unique_variance_analytic(std::size_t n);

/// Mean and minimum of (unique count)/n over `trials` independent draws.
/// Passes iff the mean is within 3 sigma of the analytic value and the
/// minimum is at least `min_fraction`. Trial i uses stream (seed, tag, i).
AuditReport unique_count_montecarlo(std::size_t n, std::uint64_t trials,
                                    double min_fraction, std::uint64_t seed,
                                    unsigned threads = 1);

/// P(erasure fraction <= 2/3) for the unique-index assembly at length n,
/// from the analytic mean and variance of the unique count (normal
/// approximation with continuity correction).
double erasure_fraction_rate_analytic(std::size_t n);

/// Fraction of unique-index assemblies at length n whose erasure fraction
/// is at most 2/3. Passes iff it is at least the analytic rate minus 3 sigma.
AuditReport erasure_fraction_audit(std::size_t n, std::uint64_t trials,
                                   std::uint64_t seed, unsigned threads = 1);

struct BallSize {
  // Decimal strings; the values overflow 64 bits for realistic sizes.
  std::string exact;
  std::string lower;  // C(N, r) (q-1)^r
  std::string upper;  // (r+1) C(N, r) (q-1)^r
  bool within = false;
  /// r <= (N+1)(q-1)/q, where the terms of the sum are nondecreasing and
  /// the upper bound is guaranteed.
  bool monotone_regime = false;
};

/// Size of a Hamming ball of radius r in q-ary words of length N = n - s.
/// Throws std::invalid_argument if r > n - s or q < 2.
BallSize ball_size(std::size_t n, std::size_t s, std::size_t r, std::uint64_t q);

/// Checks exact-within-bounds for `samples` random (n, s, r, q) tuples in
/// the monotone regime.
AuditReport ball_size_audit(std::uint64_t samples, std::uint64_t seed);

/// Returns the unique codeword within restricted distance r of a received
/// word, if the decoder finds one.
using NearDecoder = std::function<std::optional<Word>(const ReceivedWord&)>;

struct RandFarSetup {
  const LinearCode* code = nullptr;
  std::vector<std::size_t> erasures;  // S
  std::size_t radius = 0;             // r
  std::size_t min_distance = 0;       // distance of `code`
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Bounded-distance decoder with radius >= r. Empty means exhaustive
  /// codebook search.
  NearDecoder decoder;
  /// Also run the exhaustive search on every trial and require agreement.
  bool cross_check = false;
  unsigned threads = 1;
};

/// Frequency with which a uniformly random word on [n] \ S lies within
/// restricted distance r of a codeword. Passes iff it is within 3 sigma of
/// |C| |B_r| / q^(n-|S|) (balls are disjoint under the preconditions) and
/// at most (r+1) 2^-r + 3 sigma. Not applicable when trials == 0,
/// 4r + |S| >= min_distance, or r > (n - |S|)/(8e).
AuditReport rand_far_audit(const RandFarSetup& setup);

enum class KwiseMode { exhaustive, sampled };

/// Marginal uniformity of every (exhaustive) or `samples` random (sampled)
/// coordinate subsets of size 1..D, via the rank criterion. Exhaustive
/// mode also enumerates the codebook and checks that each pattern on each
/// subset occurs exactly |C| / q^|S| times. Throws BudgetExceeded when
/// subsets x codebook exceeds `budget`.
AuditReport kwise_audit(const LinearCode& code, std::size_t max_subset,
                        KwiseMode mode, std::uint64_t samples = 0,
                        std::uint64_t seed = 0,
                        std::uint64_t budget = kEnumerationBudget);

/// Exact pmf of the planted tuple distribution at n = q = 2^m with degree
/// bound k, tails marginalized. Outcome x = (t_1, ..., t_n) with
/// t_i = (j_i - 1) * q + y_i is indexed as sum_i t_i (nq)^(n-1-i).
/// Probabilities are integers over `denominator`.
struct ExactPlantedPmf {
  std::size_t n = 0;
  std::uint64_t symbols_per_coordinate = 0;  // n q
  std::uint64_t denominator = 0;
  std::vector<std::uint64_t> mass;
};

/// Throws std::invalid_argument unless 1 <= m <= 2 and k < n.
ExactPlantedPmf planted_pmf_exact(unsigned m, std::size_t k);

/// P(x) = P(pi x) for all n! coordinate permutations, exactly.
AuditReport sn_invariance_exact(unsigned m = 2, std::size_t k = 1);

/// Every marginal on at most D coordinates equals the i.i.d. uniform tuple
/// distribution, exactly. With D beyond the dual distance minus one the
/// report is informational: pass is unset and the first failing subset,
/// if any, is listed in the parameters.
AuditReport tuple_kwise_exact(std::size_t max_subset, unsigned m = 2,
                              std::size_t k = 1);

/// Brute-forced dual distance of RS(n, k) against the MDS value k + 2.
AuditReport rs_dual_distance_audit(const ReedSolomon& rs);

/// Brute-forced dual distance of a BCH instance against the analytic
/// bound; passes iff the exact value is at least the bound.
AuditReport bch_dual_distance_audit(const BinaryCodeInstance& instance);

}  // namespace lowdeg
