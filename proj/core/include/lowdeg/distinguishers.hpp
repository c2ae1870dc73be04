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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lowdeg/bch.hpp"
#include "lowdeg/planted.hpp"
#include "lowdeg/received_word.hpp"
#include "lowdeg/reed_solomon.hpp"

namespace lowdeg {

enum class Decision { Null, Planted };

enum class DecodeStatus {
  decoded,        // decoder returned a codeword within the threshold
  decode_failed,  // decoder returned fail
  too_far,        // decoded, but the restricted distance exceeds threshold
};

std::string_view to_string(Decision d) noexcept;
std::string_view to_string(DecodeStatus s) noexcept;

struct Verdict {
  Decision decision = Decision::Null;
  std::optional<Word> decoded;
  std::size_t distance = 0;  // restricted distance to `decoded`, if any
  std::size_t erasures = 0;  // |S|
  std::size_t threshold = 0;
  DecodeStatus status = DecodeStatus::decode_failed;
};

/// |{i not in S : x_i != y_i}|. Throws std::invalid_argument on a length
/// mismatch or an erasure outside S.
std::size_t restricted_hamming(std::span<const MaybeSymbol> x,
                               std::span<const MaybeSymbol> y,
                               std::span<const std::size_t> erasure_set);

/// Restricted distance between a received word (S = its erasures) and a
/// full word.
std::size_t restricted_hamming(const ReceivedWord& received,
                               std::span<const FieldElement> word);

/// c'_{j} = y_i for every j appearing exactly once among the tuples; every
/// colliding or absent position is erased. Throws std::out_of_range for j
/// outside [1, n].
ReceivedWord unique_index_assembly(std::span<const Tuple> tuples, std::size_t n);

/// Parameter checks for the real-valued test:
///   16 delta n + (2n/3 + 4 delta n) < n - k   and   delta <= 1/(96e).
struct Thm1Feasibility {
  bool feasible = false;
  bool decoding_ok = false;
  bool delta_ok = false;
  double error_budget = 0.0;    // 8 delta n
  double erasure_budget = 0.0;  // 2n/3 + 4 delta n
  double lhs = 0.0;             // 16 delta n + erasure_budget
  double rhs = 0.0;             // n - k
  double delta_max = 0.0;       // 1/(96e)
  std::size_t threshold = 0;    // floor(4 delta n)
  std::string violation;        // empty when feasible
};

Thm1Feasibility thm1_feasible(std::size_t n, std::size_t k, double delta);

/// Real-valued test: decode every symbol's tuple, assemble c' and S, run
/// the RS decoder once, and answer Planted iff it returns a codeword within
/// restricted distance floor(4 delta n).
Verdict thm1_test(std::span<const RealSymbol> sample, const TupleLayout& layout,
                  const ReedSolomon& rs, double delta);

/// Parameter checks for the binary test. The strict regime is
/// delta <= min(1/(16e), zeta/8). The test itself is well defined whenever
/// delta <= 1/(16e) and the integer threshold floor(2 delta n) stays within
/// the decoding radius t; `feasible` reports the latter.
struct Thm2Feasibility {
  bool feasible = false;
  bool strict_regime = false;
  double delta_max_strict = 0.0;  // min(1/(16e), zeta/8)
  double delta_max_soundness = 0.0;  // 1/(16e)
  std::size_t threshold = 0;      // floor(2 delta n)
  std::string violation;
};

Thm2Feasibility thm2_feasible(const BinaryCodeInstance& instance, double delta);

/// Binary test: decode; Planted iff a codeword within Hamming distance
/// floor(2 delta n) is returned.
Verdict thm2_test(std::span<const FieldElement> sample,
                  const BinaryCodeInstance& instance, double delta);

}  // namespace lowdeg
