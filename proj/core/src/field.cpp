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

#include "lowdeg/field.hpp"

#include <array>
#include <string>

namespace lowdeg {

namespace detail {

struct FieldTables {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::uint32_t primitive = 1;
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;
};

}  // namespace detail

namespace {

// Primitive polynomials over GF(2), bit i = coefficient of x^i.
constexpr std::array<std::uint32_t, 17> kBinaryModuli = {
    0x0,    0x3,    0x7,    0xB,    0x13,   0x25,   0x43,    0x89,   0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t index, std::uint32_t p, std::uint32_t m) {
  Digits d(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t index = 0;
  for (std::size_t i = d.size(); i-- > 0;) index = index * p + d[i];
  return index;
}

// Remainder of a modulo monic b over GF(p); both lowest-first, trimmed.
Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + std::uint64_t{p - lead} * b[i]) % p);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, const Digits& modulus,
                     std::uint32_t p, std::uint32_t m) {
  const Digits da = to_digits(a, p, m);
  const Digits db = to_digits(b, p, m);
  Digits prod(2 * m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    }
  }
  Digits r = poly_mod(std::move(prod), modulus, p);
  r.resize(m, 0);
  return from_digits(r, p);
}

Digits default_modulus(std::uint32_t p, std::uint32_t m) {
  if (p == 2) {
    Digits d(m + 1);
    for (std::uint32_t i = 0; i <= m; ++i) d[i] = (kBinaryModuli[m] >> i) & 1u;
    return d;
  }
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint32_t low = 0; low < count; ++low) {
    Digits d = to_digits(low, p, m);
    d.push_back(1);
    if (is_irreducible(d, p)) return d;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::uint64_t order_of(std::uint32_t g, const Digits& modulus, std::uint32_t p,
                       std::uint32_t m, std::uint32_t q) {
  std::uint32_t x = g;
  for (std::uint64_t k = 1; k < q; ++k) {
    if (x == 1) return k;
    x = mulmod(x, g, modulus, p, m);
  }
  return 0;
}

}  // namespace

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  Digits f(coeffs.begin(), coeffs.end());
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Digits g = to_digits(static_cast<std::uint32_t>(low), p,
                           static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  }
  if (m == 0) throw std::invalid_argument("field degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw std::invalid_argument("unsupported field GF(" + std::to_string(p) +
                                  "^" + std::to_string(m) +
                                  "): order exceeds 2^16");
    }
  }

  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = default_modulus(p, m);
  if (!is_irreducible(t->modulus, p)) {
    throw std::logic_error("modulus table entry is reducible");
  }

  // Prefer x itself as the generator, then the smallest primitive index.
  std::uint32_t gen = 0;
  if (t->q == 2) {
    gen = 1;
  } else {
    const std::uint32_t x = (m >= 2) ? p : 0;
    if (x != 0 && order_of(x, t->modulus, p, m, t->q) == q - 1) {
      gen = x;
    } else {
      for (std::uint32_t c = 2; c < q; ++c) {
        if (order_of(c, t->modulus, p, m, t->q) == q - 1) {
          gen = c;
          break;
        }
      }
    }
  }
  if (gen == 0) throw std::logic_error("no primitive element found");
  t->primitive = gen;

  const std::uint32_t order = t->q - 1;
  t->exp.assign(2 * static_cast<std::size_t>(order), 0);
  t->log.assign(t->q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    t->exp[i] = x;
    t->exp[i + order] = x;
    t->log[x] = i;
    x = mulmod(x, gen, t->modulus, p, m);
  }
  for (std::uint32_t a = 1; a < t->q; ++a) {
    if (t->exp[t->log[a]] != a) {
      throw std::logic_error("exp/log tables are not mutually inverse");
    }
  }
  return Field(std::move(t));
}

Field Field::of_order(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) {
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  }
  return make(p, m);
}

Field::Field(std::shared_ptr<const detail::FieldTables> tables)
    : tables_(std::move(tables)),
      p_(tables_->p),
      m_(tables_->m),
      q_(tables_->q),
      exp_(tables_->exp.data()),
      log_(tables_->log.data()) {}

const std::vector<std::uint32_t>& Field::modulus() const noexcept {
  return tables_->modulus;
}

FieldElement Field::primitive() const noexcept { return {tables_->primitive}; }

FieldElement Field::element(std::uint32_t index) const {
  if (index >= q_) {
    throw std::out_of_range("index " + std::to_string(index) +
                            " outside GF(" + std::to_string(q_) + ")");
  }
  return {index};
}

void Field::validate(std::span<const FieldElement> elements) const {
  for (FieldElement a : elements) {
    if (a.index >= q_) {
      throw std::invalid_argument("element " + std::to_string(a.index) +
                                  " does not belong to GF(" +
                                  std::to_string(q_) + ")");
    }
  }
}

FieldElement Field::add_general(FieldElement a, FieldElement b) const noexcept {
  if (m_ == 1) return {(a.index + b.index) % p_};
  std::uint32_t x = a.index, y = b.index, r = 0, place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return {r};
}

FieldElement Field::neg_general(FieldElement a) const noexcept {
  if (m_ == 1) return {(p_ - a.index) % p_};
  std::uint32_t x = a.index, r = 0, place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return {r};
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
  return mul(a, inv(b));
}

FieldElement Field::inv(FieldElement a) const {
  if (a.index == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t order = q_ - 1;
  return {exp_[(order - log_[a.index]) % order]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const noexcept {
  if (e == 0) return {1};
  if (a.index == 0) return {0};
  const std::uint64_t order = q_ - 1;
  return {exp_[(static_cast<std::uint64_t>(log_[a.index]) * (e % order)) %
               order]};
}

std::uint32_t Field::log(FieldElement a) const {
  if (a.index == 0) throw std::domain_error("log of zero");
  return log_[a.index];
}

}  // namespace lowdeg
