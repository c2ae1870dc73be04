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

#include "lowdeg/reed_solomon.hpp"

#include <stdexcept>
#include <string>

namespace lowdeg {

namespace {

RSParams make_params(const Field& field, std::size_t n, std::size_t k) {
  if (n == 0 || k >= n) {
    throw std::invalid_argument("Reed-Solomon requires 0 <= k < n (got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) +
                                ")");
  }
  if (n > field.order()) {
    throw std::invalid_argument("Reed-Solomon length " + std::to_string(n) +
                                " exceeds field order " +
                                std::to_string(field.order()));
  }
  RSParams p{field, n, k, {}};
  p.eval_points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.eval_points.push_back(FieldElement{static_cast<std::uint32_t>(i)});
  }
  return p;
}

Matrix vandermonde(const RSParams& p) {
  Matrix g(p.dimension(), p.n);
  for (std::size_t j = 0; j < p.n; ++j) {
    FieldElement power = Field::one();
    for (std::size_t i = 0; i < p.dimension(); ++i) {
      g(i, j) = power;
      power = p.field.mul(power, p.eval_points[j]);
    }
  }
  return g;
}

}  // namespace

ReedSolomon::ReedSolomon(Field field, std::size_t n, std::size_t k)
    : params_(make_params(field, n, k)),
      code_(params_.field, n, vandermonde(params_)) {}

ReedSolomon rs_make(const Field& field, std::size_t n, std::size_t k) {
  return ReedSolomon(field, n, k);
}

long ReedSolomon::error_capacity(std::size_t erasures) const noexcept {
  const std::size_t budget = params_.n - params_.k;
  if (erasures >= budget) return -1;
  return static_cast<long>((budget - erasures - 1) / 2);
}

Word ReedSolomon::evaluate(const poly::Poly& p) const {
  Word out(params_.n);
  for (std::size_t j = 0; j < params_.n; ++j) {
    out[j] = poly::eval(params_.field, p, params_.eval_points[j]);
  }
  return out;
}

// Gao's decoder run on the punctured code of non-erased positions: with N
// surviving points and dimension K = k + 1 it corrects up to (N - K) / 2
// errors, which is exactly 2r + s < n - k.
std::optional<Word> ReedSolomon::decode(const ReceivedWord& received) const {
  if (received.size() != params_.n) {
    throw std::invalid_argument("received word has length " +
                                std::to_string(received.size()) +
                                ", expected " + std::to_string(params_.n));
  }
  const Field& f = params_.field;
  std::vector<FieldElement> points;
  std::vector<FieldElement> values;
  points.reserve(params_.n);
  values.reserve(params_.n);
  for (std::size_t i = 0; i < params_.n; ++i) {
    if (received.erased(i)) continue;
    const FieldElement v = received.value(i);
    if (!f.contains(v)) {
      throw std::invalid_argument("received symbol outside the code's field");
    }
    points.push_back(params_.eval_points[i]);
    values.push_back(v);
  }
  const std::size_t erasures = params_.n - points.size();
  const long capacity = error_capacity(erasures);
  if (capacity < 0) return std::nullopt;

  const std::size_t N = points.size();
  const std::size_t K = params_.dimension();
  const long k = static_cast<long>(params_.k);

  poly::Poly remainder = poly::interpolate(f, points, values);
  poly::Poly message;
  if (poly::degree(remainder) <= k) {
    message = std::move(remainder);
  } else {
    poly::Poly prev_rem = poly::from_roots(f, points);
    poly::Poly prev_v;                     // 0
    poly::Poly v{Field::one()};            // 1
    while (2 * poly::degree(remainder) >= static_cast<long>(N + K)) {
      auto [quot, rem] = poly::divmod(f, prev_rem, remainder);
      prev_rem = std::move(remainder);
      remainder = std::move(rem);
      poly::Poly next_v = poly::sub(f, prev_v, poly::mul(f, quot, v));
      prev_v = std::move(v);
      v = std::move(next_v);
    }
    auto [quot, rem] = poly::divmod(f, remainder, v);
    if (!rem.empty() || poly::degree(quot) > k) return std::nullopt;
    message = std::move(quot);
  }

  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (poly::eval(f, message, points[i]) != values[i]) ++disagreements;
  }
  if (static_cast<long>(disagreements) > capacity) return std::nullopt;

  Word codeword = evaluate(message);
  if (!code_.contains(codeword)) return std::nullopt;
  return codeword;
}

}  // namespace lowdeg
