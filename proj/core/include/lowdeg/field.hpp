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
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace lowdeg {

/// An element of GF(q) stored as its canonical index in [0, q).
///
/// For q = p^m the index is the base-p number whose digits are the
/// coefficients of the element's polynomial representation (lowest degree in
/// the least significant digit). In characteristic 2 the index is therefore
/// the usual bit-encoded polynomial. Elements carry no field pointer; the
/// owning Field is always passed explicitly.
struct FieldElement {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

using Word = std::vector<FieldElement>;

namespace detail {
struct FieldTables;
}  // namespace detail

/// Finite field GF(p^m) with p^m <= 2^16.
///
/// Immutable after construction and cheap to copy (the log/exp tables are
/// shared). The reduction polynomial is fixed per (p, m): a standard primitive
/// polynomial table in characteristic 2, the lexicographically first monic
/// irreducible otherwise. Irreducibility is re-verified by trial division at
/// construction.
///
/// Arithmetic members do not range-check their operands; use validate() at
/// API boundaries.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws std::invalid_argument for a non-prime p or p^m > 2^16.
  static Field make(std::uint32_t p, std::uint32_t m);

  /// Field of the given prime-power order.
  static Field of_order(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }

  /// Reduction polynomial coefficients, lowest degree first, monic, size m+1.
  const std::vector<std::uint32_t>& modulus() const noexcept;

  /// Generator of the multiplicative group used for the log/exp tables.
  FieldElement primitive() const noexcept;

  static constexpr FieldElement zero() noexcept { return {0}; }
  static constexpr FieldElement one() noexcept { return {1}; }

  /// Checked conversion from an index. Throws std::out_of_range.
  FieldElement element(std::uint32_t index) const;

  bool contains(FieldElement a) const noexcept { return a.index < q_; }

  /// Throws std::invalid_argument if any element lies outside this field.
  void validate(std::span<const FieldElement> elements) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    if (p_ == 2) return {a.index ^ b.index};
    return add_general(a, b);
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    if (p_ == 2) return {a.index ^ b.index};
    return add_general(a, neg(b));
  }
  FieldElement neg(FieldElement a) const noexcept {
    if (p_ == 2) return a;
    return neg_general(a);
  }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (a.index == 0 || b.index == 0) return {0};
    return {exp_[log_[a.index] + log_[b.index]]};
  }
  /// Throws std::domain_error when b is zero.
  FieldElement div(FieldElement a, FieldElement b) const;
  /// Throws std::domain_error for inv(0).
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

  /// alpha^e for the primitive element alpha; e is reduced mod q-1.
  FieldElement exp(std::uint64_t e) const noexcept {
    return {exp_[e % (q_ - 1)]};
  }
  /// Discrete log base primitive(); throws std::domain_error for zero.
  std::uint32_t log(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_;
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> tables);

  FieldElement add_general(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg_general(FieldElement a) const noexcept;

  std::shared_ptr<const detail::FieldTables> tables_;
  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  const std::uint32_t* exp_ = nullptr;  // length 2(q-1), owned by tables_
  const std::uint32_t* log_ = nullptr;  // length q, owned by tables_
};

/// True iff the monic polynomial (coefficients lowest first) is irreducible
/// over GF(p), by trial division against every monic polynomial of degree
/// 1..deg/2.
bool is_irreducible(std::span<const std::uint32_t> coeffs, std::uint32_t p);

bool is_prime(std::uint32_t p) noexcept;

}  // namespace lowdeg
