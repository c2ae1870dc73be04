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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lowdeg/bch.hpp"
#include "lowdeg/field.hpp"
#include "lowdeg/reed_solomon.hpp"
#include "lowdeg/rng.hpp"

namespace lowdeg {

/// A real number in [0, 1) in 64-bit fixed point: value = frac / 2^64.
struct RealSymbol {
  std::uint64_t frac = 0;

  double value() const noexcept {
    return static_cast<double>(frac) * 0x1.0p-64;
  }
  friend constexpr auto operator<=>(RealSymbol, RealSymbol) = default;
};

/// Bit layout of a (j, y) tuple inside a RealSymbol for n = q = 2^m.
///
///   bits 63 .. 64-m      j - 1
///   bits 63-m .. 64-2m   y (field element index)
///   remaining bits       tail, carries no information
///
/// The top 2m bits are a bijection onto [n] x GF(q), so a uniform symbol
/// decodes to a uniform tuple.
class TupleLayout {
 public:
  /// Throws std::invalid_argument unless 1 <= m and 2m <= 64 and 2^m fits a
  /// supported field.
  explicit TupleLayout(unsigned m);

  unsigned index_bits() const noexcept { return m_; }
  unsigned tail_bits() const noexcept { return 64 - 2 * m_; }
  std::size_t n() const noexcept { return std::size_t{1} << m_; }
  std::uint64_t tail_mask() const noexcept;

 private:
  unsigned m_;
};

struct Tuple {
  std::uint32_t j = 1;  // 1-based index into [n]
  FieldElement y;
  friend constexpr bool operator==(const Tuple&, const Tuple&) = default;
};

struct DecodedSymbol {
  Tuple tuple;
  std::uint64_t tail = 0;
};

/// Throws std::out_of_range for j outside [1, n] or y outside GF(n), and
/// std::invalid_argument if tail has bits above tail_bits().
RealSymbol encode_tuple(const TupleLayout& layout, std::uint32_t j,
                        FieldElement y, std::uint64_t tail);
DecodedSymbol decode_tuple(const TupleLayout& layout, RealSymbol x);

std::vector<Tuple> decode_tuples(const TupleLayout& layout,
                                 std::span<const RealSymbol> symbols);

/// i.i.d. uniform symbols (null distribution of the real-valued model).
std::vector<RealSymbol> sample_null_symbols(std::size_t count, Rng& rng);

/// i.i.d. uniform bits (null distribution of the binary model).
Word sample_null_bits(std::size_t n, Rng& rng);

/// A planted real-valued sample. Distinguishers receive only `symbols`; the
/// hidden codeword and index vector exist for diagnostics and adversaries.
struct PlantedSampleThm1 {
  std::vector<RealSymbol> symbols;
  Word hidden_codeword;
  std::vector<std::uint32_t> hidden_indices;  // j_1 .. j_n, 1-based
};

/// Draws a uniform codeword c and i.i.d. uniform j_i in [n]; y_i = c_{j_i}
/// when j_i occurs exactly once, otherwise uniform; uniform tails.
/// Throws std::invalid_argument unless the code is RS over GF(2^m) with
/// n = q = 2^m matching the layout.
PlantedSampleThm1 sample_planted_thm1(const TupleLayout& layout,
                                      const ReedSolomon& rs, Rng& rng);

/// Uniform codeword of the instance.
Word sample_planted_thm2(const BinaryCodeInstance& instance, Rng& rng);

// Sample dump format: one line per coordinate, 16 lowercase hex digits of
// frac for real-valued samples, "0"/"1" for binary ones.
void write_dump(std::ostream& out, std::span<const RealSymbol> symbols);
void write_dump(std::ostream& out, std::span<const FieldElement> bits);
std::vector<RealSymbol> read_symbol_dump(std::istream& in);
Word read_bit_dump(std::istream& in);

}  // namespace lowdeg
