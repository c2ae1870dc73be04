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

#include "lowdeg/bch.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace lowdeg {

std::string_view to_string(DualBoundKind kind) noexcept {
  switch (kind) {
    case DualBoundKind::exact_bruteforce:
      return "exact-bruteforce";
    case DualBoundKind::analytic_bound:
      return "analytic-bound";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxBruteforceDualDimension = 24;

// Product of the minimal polynomials of alpha^1 .. alpha^(2t).
poly::Poly bch_generator(const Field& ext, const Field& gf2, std::size_t n,
                         std::size_t t) {
  std::vector<bool> covered(n, false);
  poly::Poly g{Field::one()};
  for (std::size_t i = 1; i <= 2 * t; ++i) {
    const std::size_t rep = i % n;
    if (covered[rep]) continue;
    std::vector<FieldElement> roots;
    std::size_t c = rep;
    do {
      covered[c] = true;
      roots.push_back(ext.exp(c));
      c = (2 * c) % n;
    } while (c != rep);
    const poly::Poly minimal = poly::from_roots(ext, roots);
    for (FieldElement coeff : minimal) {
      if (coeff.index > 1) {
        throw std::logic_error("minimal polynomial is not binary");
      }
    }
    g = poly::mul(gf2, g, minimal);
  }
  return g;
}

}  // namespace

double bch_dual_analytic_bound(unsigned m, std::size_t t) {
  return std::ldexp(1.0, static_cast<int>(m) - 1) -
         static_cast<double>(t - 1) * std::pow(2.0, static_cast<double>(m) / 2.0);
}

BinaryCodeInstance bch_make(unsigned m, std::size_t t) {
  if (m < 2 || m > 16) {
    throw std::invalid_argument("BCH degree m must lie in [2, 16], got " +
                                std::to_string(m));
  }
  if (t == 0) throw std::invalid_argument("BCH radius t must be >= 1");
  const std::size_t n = (std::size_t{1} << m) - 1;
  if (2 * t >= n) {
    throw std::invalid_argument("BCH radius t=" + std::to_string(t) +
                                " infeasible for n=" + std::to_string(n));
  }

  Field ext = Field::make(2, m);
  Field gf2 = Field::make(2, 1);
  poly::Poly g = bch_generator(ext, gf2, n, t);
  const std::size_t redundancy = static_cast<std::size_t>(poly::degree(g));
  if (redundancy >= n) {
    throw std::invalid_argument("BCH(m=" + std::to_string(m) + ", t=" +
                                std::to_string(t) + ") has dimension 0");
  }
  const std::size_t k = n - redundancy;

  Matrix gen(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) gen(i, i + j) = g[j];
  }
  LinearCode code(gf2, n, std::move(gen));

  std::size_t dual_lb = 1;
  DualBoundKind kind = DualBoundKind::analytic_bound;
  if (redundancy <= kMaxBruteforceDualDimension) {
    dual_lb = min_weight_bruteforce(dual_code(code));
    kind = DualBoundKind::exact_bruteforce;
  } else {
    const double bound = bch_dual_analytic_bound(m, t);
    if (bound >= 1.0) dual_lb = static_cast<std::size_t>(std::floor(bound));
  }

  BinaryCodeInstance inst{std::move(code),
                          t,
                          dual_lb,
                          kind,
                          2.0 * static_cast<double>(t) / static_cast<double>(n),
                          m,
                          std::move(ext),
                          std::move(g)};
  return inst;
}

std::optional<Word> bch_decode(const BinaryCodeInstance& inst,
                               std::span<const FieldElement> received) {
  const std::size_t n = inst.length();
  if (received.size() != n) {
    throw std::invalid_argument("received word has length " +
                                std::to_string(received.size()) +
                                ", expected " + std::to_string(n));
  }
  for (FieldElement b : received) {
    if (b.index > 1) throw std::invalid_argument("non-binary symbol");
  }
  const Field& f = inst.extension;
  const std::size_t two_t = 2 * inst.t;

  // S_j = r(alpha^j), j = 1..2t.
  std::vector<FieldElement> syndromes(two_t, Field::zero());
  bool clean = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (received[i].index == 0) continue;
    for (std::size_t j = 0; j < two_t; ++j) {
      syndromes[j] = f.add(syndromes[j], f.exp(i * (j + 1)));
    }
  }
  for (FieldElement s : syndromes) clean = clean && s.index == 0;

  Word word(received.begin(), received.end());
  if (!clean) {
    // Berlekamp-Massey for the error locator Lambda(x) = prod (1 - X_l x).
    poly::Poly lambda{Field::one()};
    poly::Poly prev{Field::one()};
    std::size_t length = 0;
    std::size_t shift = 1;
    FieldElement prev_disc = Field::one();
    for (std::size_t r = 0; r < two_t; ++r) {
      FieldElement disc = syndromes[r];
      for (std::size_t i = 1; i <= length && i < lambda.size(); ++i) {
        disc = f.add(disc, f.mul(lambda[i], syndromes[r - i]));
      }
      if (disc.index == 0) {
        ++shift;
        continue;
      }
      const FieldElement factor = f.div(disc, prev_disc);
      poly::Poly update(shift, Field::zero());
      for (FieldElement c : prev) update.push_back(f.mul(c, factor));
      poly::Poly next = poly::sub(f, lambda, update);
      if (2 * length <= r) {
        prev = std::move(lambda);
        length = r + 1 - length;
        prev_disc = disc;
        shift = 1;
      } else {
        ++shift;
      }
      lambda = std::move(next);
    }
    if (length > inst.t || poly::degree(lambda) != static_cast<long>(length)) {
      return std::nullopt;
    }
    // Chien search: position i is in error iff Lambda(alpha^-i) = 0.
    const std::size_t order = n;  // multiplicative order of alpha
    std::size_t roots = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const FieldElement x = f.exp((order - i) % order);
      if (poly::eval(f, lambda, x).index == 0) {
        word[i] = FieldElement{word[i].index ^ 1u};
        ++roots;
      }
    }
    if (roots != length) return std::nullopt;
  }
  if (!inst.code.contains(word)) return std::nullopt;
  return word;
}

}  // namespace lowdeg
