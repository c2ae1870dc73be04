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

#include "lowdeg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lowdeg::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back().index == 0) a.pop_back();
}

long degree(const Poly& a) {
  long d = static_cast<long>(a.size()) - 1;
  while (d >= 0 && a[static_cast<std::size_t>(d)].index == 0) --d;
  return d;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    const FieldElement x = i < a.size() ? a[i] : Field::zero();
    const FieldElement y = i < b.size() ? b[i] : Field::zero();
    r[i] = f.add(x, y);
  }
  trim(r);
  return r;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    const FieldElement x = i < a.size() ? a[i] : Field::zero();
    const FieldElement y = i < b.size() ? b[i] : Field::zero();
    r[i] = f.sub(x, y);
  }
  trim(r);
  return r;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

Poly scale(const Field& f, const Poly& a, FieldElement c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  const long db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  trim(rem);
  const long da = degree(rem);
  if (da < db) return {Poly{}, rem};
  Poly quot(static_cast<std::size_t>(da - db + 1));
  const FieldElement lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  for (long i = da; i >= db; --i) {
    const FieldElement c = rem[static_cast<std::size_t>(i)];
    if (c.index == 0) continue;
    const FieldElement factor = f.mul(c, lead_inv);
    const auto shift = static_cast<std::size_t>(i - db);
    quot[shift] = factor;
    for (long j = 0; j <= db; ++j) {
      const auto pos = shift + static_cast<std::size_t>(j);
      rem[pos] = f.sub(rem[pos], f.mul(factor, b[static_cast<std::size_t>(j)]));
    }
  }
  trim(quot);
  trim(rem);
  return {std::move(quot), std::move(rem)};
}

FieldElement eval(const Field& f, const Poly& a, FieldElement x) {
  FieldElement acc = Field::zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

Poly from_roots(const Field& f, std::span<const FieldElement> roots) {
  Poly r{Field::one()};
  r.reserve(roots.size() + 1);
  for (FieldElement root : roots) {
    // r <- r * (x - root)
    const FieldElement neg_root = f.neg(root);
    r.push_back(Field::zero());
    for (std::size_t i = r.size() - 1; i > 0; --i) {
      r[i] = f.add(r[i - 1], f.mul(r[i], neg_root));
    }
    r[0] = f.mul(r[0], neg_root);
  }
  trim(r);
  return r;
}

Poly interpolate(const Field& f, std::span<const FieldElement> points,
                 std::span<const FieldElement> values) {
  if (points.size() != values.size()) {
    throw std::invalid_argument("interpolate: size mismatch");
  }
  const std::size_t n = points.size();
  // Divided differences in place.
  Poly coef(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const FieldElement num = f.sub(coef[i], coef[i - 1]);
      const FieldElement den = f.sub(points[i], points[i - level]);
      coef[i] = f.div(num, den);
    }
  }
  // Horner expansion of the Newton form into the monomial basis.
  Poly r;
  r.reserve(n);
  for (std::size_t i = n; i-- > 0;) {
    // r <- r * (x - points[i]) + coef[i]
    const FieldElement neg_pt = f.neg(points[i]);
    r.push_back(Field::zero());
    for (std::size_t j = r.size() - 1; j > 0; --j) {
      r[j] = f.add(r[j - 1], f.mul(r[j], neg_pt));
    }
    r[0] = f.add(f.mul(r[0], neg_pt), coef[i]);
  }
  trim(r);
  return r;
}

}  // namespace lowdeg::poly
