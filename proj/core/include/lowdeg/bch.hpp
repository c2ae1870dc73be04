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
#include <string_view>

#include "lowdeg/field.hpp"
#include "lowdeg/linear_code.hpp"
#include "lowdeg/polynomial.hpp"

namespace lowdeg {

enum class DualBoundKind { exact_bruteforce, analytic_bound };

std::string_view to_string(DualBoundKind kind) noexcept;

/// A binary linear code with a certified dual-distance lower bound and a
/// decoder guaranteed up to t errors. Any code meeting both contracts can be
/// used by the binary distinguisher; BCH codes are the provided instance.
struct BinaryCodeInstance {
  LinearCode code;           // over GF(2)
  std::size_t t = 0;         // guaranteed error-correction radius
  std::size_t dual_lb = 0;   // lower bound on the dual distance
  DualBoundKind dual_lb_kind = DualBoundKind::analytic_bound;
  double zeta = 0.0;         // 2t / n

  // BCH-specific data for the syndrome decoder.
  unsigned m = 0;
  Field extension;           // GF(2^m)
  poly::Poly generator_poly; // over GF(2), lowest degree first

  std::size_t length() const noexcept { return code.length(); }
};

/// 2^(m-1) - (t-1) 2^(m/2): lower bound on the dual distance of the
/// narrow-sense binary BCH code of length 2^m - 1 and designed radius t.
/// May be nonpositive for large t, in which case it says nothing.
double bch_dual_analytic_bound(unsigned m, std::size_t t);

/// Narrow-sense primitive BCH code of length 2^m - 1 and designed distance
/// 2t + 1.
///
/// The dual distance bound is computed by brute force when the dual has
/// dimension <= 24; otherwise the Carlitz-Uchiyama bound
/// 2^(m-1) - (t-1) 2^(m/2) is recorded and labelled analytic.
/// Throws std::invalid_argument for m outside [2, 16], t == 0, or an empty
/// code.
BinaryCodeInstance bch_make(unsigned m, std::size_t t);

/// Syndrome decoding (Berlekamp-Massey + Chien search). Returns the codeword
/// within distance t of `received` if one exists, otherwise nullopt; never a
/// non-codeword. Throws std::invalid_argument on a length mismatch or a
/// non-binary symbol.
std::optional<Word> bch_decode(const BinaryCodeInstance& instance,
                               std::span<const FieldElement> received);

}  // namespace lowdeg
