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
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lowdeg/field.hpp"
#include "lowdeg/rng.hpp"

namespace lowdeg {

/// Row-major dense matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  FieldElement operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const FieldElement> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<FieldElement> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Reduced row echelon form, computed in place with the leftmost available
/// pivot in each column. Returns the pivot column of each nonzero row; rows
/// past the rank are zero on return.
std::vector<std::size_t> row_reduce(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Thrown when an exhaustive enumeration would exceed its word budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear code C <= F^n given by a generator basis, with a parity-check
/// basis derived from the reduced echelon form of the generator.
class LinearCode {
 public:
  /// Throws std::invalid_argument if the rows are not linearly independent,
  /// have the wrong length, or contain elements outside the field.
  LinearCode(Field field, std::size_t length, Matrix generator);

  const Field& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return generator_.rows(); }

  /// dim x n; rows are the basis the code was built from.
  const Matrix& generator() const noexcept { return generator_; }
  /// (n - dim) x n; G H^T = 0.
  const Matrix& parity_check() const noexcept { return parity_check_; }

  /// msg^T G. Throws std::invalid_argument on a length mismatch.
  Word encode(std::span<const FieldElement> message) const;

  /// Uniform over the q^dim codewords.
  Word sample_codeword(Rng& rng) const;

  /// Exact membership test via the systematic form, O((n - dim) dim).
  bool contains(std::span<const FieldElement> word) const;

  /// H w.
  Word syndrome(std::span<const FieldElement> word) const;

 private:
  Field field_;
  std::size_t n_;
  Matrix generator_;
  Matrix echelon_;  // RREF of the generator
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_columns_;
  Matrix parity_check_;
};

/// C^perp; its generator is the parity-check basis of `code`.
LinearCode dual_code(const LinearCode& code);

/// True iff both codes have the same length, field and row space.
bool same_code(const LinearCode& a, const LinearCode& b);

inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 24;

/// q^dim, saturating at UINT64_MAX.
std::uint64_t codebook_size(const LinearCode& code);

/// Visits every codeword once (deterministic order). Throws BudgetExceeded
/// when q^dim > budget.
void for_each_codeword(const LinearCode& code,
                       const std::function<void(std::span<const FieldElement>)>& visit,
                       std::uint64_t budget = kEnumerationBudget);

/// Minimum Hamming weight over nonzero codewords by exhaustive enumeration.
/// Returns n + 1 for the zero code. Throws BudgetExceeded past the budget.
std::size_t min_weight_bruteforce(const LinearCode& code,
                                  std::uint64_t budget = kEnumerationBudget);

/// Rank criterion: true iff the columns of G indexed by `subset` are linearly
/// independent, i.e. the marginal of a uniform codeword on that subset is
/// exactly uniform.
bool subset_rank_uniform(const LinearCode& code,
                         std::span<const std::size_t> subset);

std::size_t hamming_weight(std::span<const FieldElement> word);
std::size_t hamming_distance(std::span<const FieldElement> a,
                             std::span<const FieldElement> b);

}  // namespace lowdeg
