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

#include "lowdeg/linear_code.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace lowdeg {

std::vector<std::size_t> row_reduce(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).index == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    }
    const FieldElement scale = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const FieldElement factor = m(i, c);
      if (factor.index == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return row_reduce(f, m).size(); }

LinearCode::LinearCode(Field field, std::size_t length, Matrix generator)
    : field_(std::move(field)), n_(length), generator_(std::move(generator)) {
  if (generator_.rows() > 0 && generator_.cols() != n_) {
    throw std::invalid_argument("generator has " +
                                std::to_string(generator_.cols()) +
                                " columns, expected " + std::to_string(n_));
  }
  if (generator_.rows() == 0) generator_ = Matrix(0, n_);
  for (std::size_t r = 0; r < generator_.rows(); ++r) {
    field_.validate(generator_.row(r));
  }

  echelon_ = generator_;
  pivots_ = row_reduce(field_, echelon_);
  if (pivots_.size() != generator_.rows()) {
    throw std::invalid_argument("generator rows are linearly dependent (rank " +
                                std::to_string(pivots_.size()) + " < " +
                                std::to_string(generator_.rows()) + ")");
  }

  std::vector<bool> is_pivot(n_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  for (std::size_t c = 0; c < n_; ++c) {
    if (!is_pivot[c]) free_columns_.push_back(c);
  }

  // For free column j: e_j - sum_i R[i][j] e_{p_i}.
  parity_check_ = Matrix(free_columns_.size(), n_);
  for (std::size_t h = 0; h < free_columns_.size(); ++h) {
    const std::size_t j = free_columns_[h];
    parity_check_(h, j) = Field::one();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      parity_check_(h, pivots_[i]) = field_.neg(echelon_(i, j));
    }
  }
}

Word LinearCode::encode(std::span<const FieldElement> message) const {
  if (message.size() != dimension()) {
    throw std::invalid_argument("message length " +
                                std::to_string(message.size()) +
                                " != dimension " + std::to_string(dimension()));
  }
  field_.validate(message);
  Word out(n_);
  for (std::size_t i = 0; i < message.size(); ++i) {
    const FieldElement c = message[i];
    if (c.index == 0) continue;
    const auto row = generator_.row(i);
    for (std::size_t j = 0; j < n_; ++j) {
      out[j] = field_.add(out[j], field_.mul(c, row[j]));
    }
  }
  return out;
}

Word LinearCode::sample_codeword(Rng& rng) const {
  Word msg(dimension());
  for (auto& x : msg) {
    x = FieldElement{static_cast<std::uint32_t>(rng.below(field_.order()))};
  }
  return encode(msg);
}

bool LinearCode::contains(std::span<const FieldElement> word) const {
  if (word.size() != n_) return false;
  for (FieldElement x : word) {
    if (!field_.contains(x)) return false;
  }
  for (std::size_t j : free_columns_) {
    FieldElement acc = Field::zero();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      acc = field_.add(acc, field_.mul(word[pivots_[i]], echelon_(i, j)));
    }
    if (acc != word[j]) return false;
  }
  return true;
}

Word LinearCode::syndrome(std::span<const FieldElement> word) const {
  if (word.size() != n_) throw std::invalid_argument("syndrome: length mismatch");
  Word s(parity_check_.rows());
  for (std::size_t h = 0; h < parity_check_.rows(); ++h) {
    FieldElement acc = Field::zero();
    const auto row = parity_check_.row(h);
    for (std::size_t j = 0; j < n_; ++j) {
      acc = field_.add(acc, field_.mul(row[j], word[j]));
    }
    s[h] = acc;
  }
  return s;
}

LinearCode dual_code(const LinearCode& code) {
  return LinearCode(code.field(), code.length(), code.parity_check());
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || !(a.field() == b.field()) ||
      a.dimension() != b.dimension()) {
    return false;
  }
  Matrix ra = a.generator();
  Matrix rb = b.generator();
  row_reduce(a.field(), ra);
  row_reduce(b.field(), rb);
  return ra == rb;
}

std::uint64_t codebook_size(const LinearCode& code) {
  std::uint64_t size = 1;
  const std::uint64_t q = code.field().order();
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    if (size > std::numeric_limits<std::uint64_t>::max() / q) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    size *= q;
  }
  return size;
}

void for_each_codeword(
    const LinearCode& code,
    const std::function<void(std::span<const FieldElement>)>& visit,
    std::uint64_t budget) {
  const std::uint64_t size = codebook_size(code);
  if (size > budget) {
    throw BudgetExceeded("codebook of " + std::to_string(code.field().order()) +
                         "^" + std::to_string(code.dimension()) +
                         " words exceeds enumeration budget of " +
                         std::to_string(budget));
  }
  const Field& f = code.field();
  const std::size_t n = code.length();
  const std::size_t dim = code.dimension();
  const std::uint32_t q = f.order();
  // partial[level] = sum of the first `level` rows with their chosen scalars.
  std::vector<Word> partial(dim + 1, Word(n));

  auto recurse = [&](auto&& self, std::size_t level) -> void {
    if (level == dim) {
      visit(partial[level]);
      return;
    }
    const auto row = code.generator().row(level);
    for (std::uint32_t c = 0; c < q; ++c) {
      Word& next = partial[level + 1];
      const Word& base = partial[level];
      const FieldElement scalar{c};
      for (std::size_t j = 0; j < n; ++j) {
        next[j] = f.add(base[j], f.mul(scalar, row[j]));
      }
      self(self, level + 1);
    }
  };
  recurse(recurse, 0);
}

std::size_t min_weight_bruteforce(const LinearCode& code, std::uint64_t budget) {
  std::size_t best = code.length() + 1;
  for_each_codeword(
      code,
      [&](std::span<const FieldElement> w) {
        const std::size_t wt = hamming_weight(w);
        if (wt > 0 && wt < best) best = wt;
      },
      budget);
  return best;
}

bool subset_rank_uniform(const LinearCode& code,
                         std::span<const std::size_t> subset) {
  for (std::size_t s : subset) {
    if (s >= code.length()) {
      throw std::out_of_range("subset index " + std::to_string(s) +
                              " outside block length");
    }
  }
  if (subset.empty()) return true;
  if (subset.size() > code.dimension()) return false;
  Matrix cols(code.dimension(), subset.size());
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    for (std::size_t c = 0; c < subset.size(); ++c) {
      cols(i, c) = code.generator()(i, subset[c]);
    }
  }
  return rank(code.field(), std::move(cols)) == subset.size();
}

std::size_t hamming_weight(std::span<const FieldElement> word) {
  return static_cast<std::size_t>(std::count_if(
      word.begin(), word.end(), [](FieldElement x) { return x.index != 0; }));
}

std::size_t hamming_distance(std::span<const FieldElement> a,
                             std::span<const FieldElement> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming_distance: length mismatch");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
  return d;
}

}  // namespace lowdeg
