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
#include <vector>

#include "lowdeg/field.hpp"
#include "lowdeg/linear_code.hpp"
#include "lowdeg/polynomial.hpp"
#include "lowdeg/received_word.hpp"

namespace lowdeg {

struct RSParams {
  Field field;
  std::size_t n = 0;
  /// Maximum polynomial degree; the code has dimension k + 1 and distance n-k.
  std::size_t k = 0;
  /// Field elements with indices 0, 1, ..., n-1.
  std::vector<FieldElement> eval_points;

  std::size_t dimension() const noexcept { return k + 1; }
};

/// RS_q(n, k): evaluations of polynomials of degree <= k at n distinct
/// points. Generator row i evaluates x^i, so a message is the coefficient
/// vector of the polynomial.
class ReedSolomon {
 public:
  /// Throws std::invalid_argument unless 0 <= k < n <= q.
  ReedSolomon(Field field, std::size_t n, std::size_t k);

  const RSParams& params() const noexcept { return params_; }
  const LinearCode& code() const noexcept { return code_; }

  /// Largest r with 2r + erasures < n - k; -1 when erasures alone exceed
  /// the budget.
  long error_capacity(std::size_t erasures) const noexcept;

  /// Evaluation of `poly` (degree <= k) at every point.
  Word evaluate(const poly::Poly& p) const;

  /// Bounded-distance errors-and-erasures decoding.
  ///
  /// Returns the unique codeword c with 2 * Delta_S(c, received) + |S| <
  /// n - k, or nullopt. Never returns a non-codeword. Throws
  /// std::invalid_argument on a length mismatch.
  std::optional<Word> decode(const ReceivedWord& received) const;

 private:
  RSParams params_;
  LinearCode code_;
};

ReedSolomon rs_make(const Field& field, std::size_t n, std::size_t k);

inline std::optional<Word> rs_decode(const ReedSolomon& rs,
                                     const ReceivedWord& received) {
  return rs.decode(received);
}

}  // namespace lowdeg
