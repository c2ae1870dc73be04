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

#include "lowdeg/distinguishers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lowdeg/linear_code.hpp"
#include "lowdeg/stats.hpp"

namespace lowdeg {

std::string_view to_string(Decision d) noexcept {
  return d == Decision::Planted ? "planted" : "null";
}

std::string_view to_string(DecodeStatus s) noexcept {
  switch (s) {
    case DecodeStatus::decoded:
      return "decoded";
    case DecodeStatus::decode_failed:
      return "decode-failed";
    case DecodeStatus::too_far:
      return "too-far";
  }
  return "unknown";
}

std::size_t restricted_hamming(std::span<const MaybeSymbol> x,
                               std::span<const MaybeSymbol> y,
                               std::span<const std::size_t> erasure_set) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("restricted_hamming: length mismatch");
  }
  std::vector<bool> erased(x.size(), false);
  for (std::size_t s : erasure_set) {
    if (s >= x.size()) throw std::out_of_range("erasure index outside word");
    erased[s] = true;
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (erased[i]) continue;
    if (!x[i] || !y[i]) {
      throw std::invalid_argument("erasure outside the erasure set at " +
                                  std::to_string(i));
    }
    d += (*x[i] != *y[i]) ? 1 : 0;
  }
  return d;
}

std::size_t restricted_hamming(const ReceivedWord& received,
                               std::span<const FieldElement> word) {
  if (received.size() != word.size()) {
    throw std::invalid_argument("restricted_hamming: length mismatch");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto& v = received.values()[i];
    if (v && *v != word[i]) ++d;
  }
  return d;
}

ReceivedWord unique_index_assembly(std::span<const Tuple> tuples,
                                   std::size_t n) {
  std::vector<std::uint32_t> occ(n + 1, 0);
  for (const Tuple& t : tuples) {
    if (t.j < 1 || t.j > n) {
      throw std::out_of_range("tuple index " + std::to_string(t.j) +
                              " outside [1, " + std::to_string(n) + "]");
    }
    ++occ[t.j];
  }
  ReceivedWord out(n);
  for (const Tuple& t : tuples) {
    if (occ[t.j] == 1) out.set(t.j - 1, t.y);
  }
  return out;
}

Thm1Feasibility thm1_feasible(std::size_t n, std::size_t k, double delta) {
  Thm1Feasibility r;
  const double nd = static_cast<double>(n);
  r.error_budget = 8.0 * delta * nd;
  r.erasure_budget = 2.0 * nd / 3.0 + 4.0 * delta * nd;
  r.lhs = 2.0 * r.error_budget + r.erasure_budget;
  r.rhs = nd - static_cast<double>(k);
  r.delta_max = 1.0 / (96.0 * std::numbers::e);
  r.decoding_ok = r.lhs < r.rhs;
  r.delta_ok = delta >= 0.0 && delta <= r.delta_max;
  r.feasible = r.decoding_ok && r.delta_ok && k < n;
  r.threshold = floor_scaled(4.0 * delta, n);
  std::ostringstream why;
  if (!r.delta_ok) {
    why << "delta <= 1/(96e) = " << r.delta_max << " violated (delta = " << delta
        << ")";
  }
  if (!r.decoding_ok) {
    if (!why.str().empty()) why << "; ";
    why << "16*delta*n + (2n/3 + 4*delta*n) < n - k violated (" << r.lhs
        << " >= " << r.rhs << ")";
  }
  r.violation = why.str();
  return r;
}

Verdict thm1_test(std::span<const RealSymbol> sample, const TupleLayout& layout,
                  const ReedSolomon& rs, double delta) {
  const std::size_t n = rs.params().n;
  const ReceivedWord assembled =
      unique_index_assembly(decode_tuples(layout, sample), n);
  Verdict v;
  v.erasures = assembled.erasure_count();
  v.threshold = floor_scaled(4.0 * delta, n);
  auto decoded = rs.decode(assembled);
  if (!decoded) return v;
  v.distance = restricted_hamming(assembled, *decoded);
  v.status = v.distance <= v.threshold ? DecodeStatus::decoded
                                       : DecodeStatus::too_far;
  v.decision = v.status == DecodeStatus::decoded ? Decision::Planted
                                                 : Decision::Null;
  v.decoded = std::move(decoded);
  return v;
}

Thm2Feasibility thm2_feasible(const BinaryCodeInstance& instance, double delta) {
  Thm2Feasibility r;
  const std::size_t n = instance.length();
  r.delta_max_soundness = 1.0 / (16.0 * std::numbers::e);
  r.delta_max_strict = std::min(r.delta_max_soundness, instance.zeta / 8.0);
  r.threshold = floor_scaled(2.0 * delta, n);
  r.strict_regime = delta >= 0.0 && delta <= r.delta_max_strict;
  std::ostringstream why;
  if (!(delta >= 0.0 && delta <= r.delta_max_soundness)) {
    why << "delta <= 1/(16e) = " << r.delta_max_soundness
        << " violated (delta = " << delta << ")";
  }
  if (r.threshold > instance.t) {
    if (!why.str().empty()) why << "; ";
    why << "threshold floor(2*delta*n) = " << r.threshold
        << " exceeds decoding radius t = " << instance.t;
  }
  r.violation = why.str();
  r.feasible = r.violation.empty();
  return r;
}

Verdict thm2_test(std::span<const FieldElement> sample,
                  const BinaryCodeInstance& instance, double delta) {
  Verdict v;
  v.threshold = floor_scaled(2.0 * delta, instance.length());
  auto decoded = bch_decode(instance, sample);
  if (!decoded) return v;
  v.distance = hamming_distance(sample, *decoded);
  v.status = v.distance <= v.threshold ? DecodeStatus::decoded
                                       : DecodeStatus::too_far;
  v.decision = v.status == DecodeStatus::decoded ? Decision::Planted
                                                 : Decision::Null;
  v.decoded = std::move(decoded);
  return v;
}

}  // namespace lowdeg
