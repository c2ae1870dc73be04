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

#include "lowdeg/planted.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lowdeg {

TupleLayout::TupleLayout(unsigned m) : m_(m) {
  if (m == 0 || 2 * m > 64 || m > 16) {
    throw std::invalid_argument("tuple layout needs 1 <= m <= 16, got m=" +
                                std::to_string(m));
  }
}

std::uint64_t TupleLayout::tail_mask() const noexcept {
  const unsigned bits = tail_bits();
  return bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

RealSymbol encode_tuple(const TupleLayout& layout, std::uint32_t j,
                        FieldElement y, std::uint64_t tail) {
  const std::uint64_t n = layout.n();
  if (j < 1 || j > n) {
    throw std::out_of_range("tuple index j=" + std::to_string(j) +
                            " outside [1, " + std::to_string(n) + "]");
  }
  if (y.index >= n) throw std::out_of_range("tuple value outside GF(n)");
  if ((tail & ~layout.tail_mask()) != 0) {
    throw std::invalid_argument("tail exceeds the layout's tail bits");
  }
  const unsigned m = layout.index_bits();
  const std::uint64_t frac = (std::uint64_t{j - 1} << (64 - m)) |
                             (std::uint64_t{y.index} << (64 - 2 * m)) | tail;
  return RealSymbol{frac};
}

DecodedSymbol decode_tuple(const TupleLayout& layout, RealSymbol x) {
  const unsigned m = layout.index_bits();
  const std::uint64_t field_mask = (std::uint64_t{1} << m) - 1;
  DecodedSymbol d;
  d.tuple.j = static_cast<std::uint32_t>(x.frac >> (64 - m)) + 1;
  d.tuple.y =
      FieldElement{static_cast<std::uint32_t>((x.frac >> (64 - 2 * m)) & field_mask)};
  d.tail = x.frac & layout.tail_mask();
  return d;
}

std::vector<Tuple> decode_tuples(const TupleLayout& layout,
                                 std::span<const RealSymbol> symbols) {
  std::vector<Tuple> out;
  out.reserve(symbols.size());
  for (RealSymbol s : symbols) out.push_back(decode_tuple(layout, s).tuple);
  return out;
}

std::vector<RealSymbol> sample_null_symbols(std::size_t count, Rng& rng) {
  std::vector<RealSymbol> out(count);
  for (auto& s : out) s.frac = rng.next();
  return out;
}

Word sample_null_bits(std::size_t n, Rng& rng) {
  Word out(n);
  for (auto& b : out) b = FieldElement{static_cast<std::uint32_t>(rng.next() >> 63)};
  return out;
}

PlantedSampleThm1 sample_planted_thm1(const TupleLayout& layout,
                                      const ReedSolomon& rs, Rng& rng) {
  const RSParams& p = rs.params();
  const std::size_t n = layout.n();
  if (p.n != n || p.field.order() != n || p.field.characteristic() != 2) {
    throw std::invalid_argument(
        "planted sampler needs RS over GF(2^m) with n = q = 2^m matching the "
        "layout");
  }
  PlantedSampleThm1 s;
  s.hidden_codeword = rs.code().sample_codeword(rng);
  s.hidden_indices.resize(n);
  std::vector<std::uint32_t> occurrences(n + 1, 0);
  for (auto& j : s.hidden_indices) {
    j = static_cast<std::uint32_t>(rng.below(n)) + 1;
    ++occurrences[j];
  }
  s.symbols.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t j = s.hidden_indices[i];
    const FieldElement y =
        occurrences[j] == 1
            ? s.hidden_codeword[j - 1]
            : FieldElement{static_cast<std::uint32_t>(rng.below(n))};
    const std::uint64_t tail = rng.next() & layout.tail_mask();
    s.symbols[i] = encode_tuple(layout, j, y, tail);
  }
  return s;
}

Word sample_planted_thm2(const BinaryCodeInstance& instance, Rng& rng) {
  return instance.code.sample_codeword(rng);
}

void write_dump(std::ostream& out, std::span<const RealSymbol> symbols) {
  char buf[17];
  for (RealSymbol s : symbols) {
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(s.frac));
    out << buf << '\n';
  }
}

void write_dump(std::ostream& out, std::span<const FieldElement> bits) {
  for (FieldElement b : bits) {
    if (b.index > 1) throw std::invalid_argument("non-binary symbol in dump");
    out << (b.index ? '1' : '0') << '\n';
  }
}

std::vector<RealSymbol> read_symbol_dump(std::istream& in) {
  std::vector<RealSymbol> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.size() != 16) throw std::runtime_error("bad symbol dump line: " + line);
    out.push_back(RealSymbol{std::stoull(line, nullptr, 16)});
  }
  return out;
}

Word read_bit_dump(std::istream& in) {
  Word out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line != "0" && line != "1") {
      throw std::runtime_error("bad bit dump line: " + line);
    }
    out.push_back(FieldElement{line == "1" ? 1u : 0u});
  }
  return out;
}

}  // namespace lowdeg
