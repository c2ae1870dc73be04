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

#include <gtest/gtest.h>

#include "lowdeg/polynomial.hpp"
#include "lowdeg/rng.hpp"

namespace lowdeg {
namespace {

poly::Poly random_poly(const Field& f, std::size_t len, Rng& rng) {
  poly::Poly p(len);
  for (auto& c : p) c = FieldElement{static_cast<std::uint32_t>(rng.below(f.order()))};
  poly::trim(p);
  return p;
}

TEST(Polynomial, DegreeOfZeroIsMinusOne) {
  EXPECT_EQ(poly::degree({}), -1);
  poly::Poly p{Field::zero(), Field::zero()};
  poly::trim(p);
  EXPECT_TRUE(p.empty());
}

TEST(Polynomial, DivmodReconstructs) {
  const Field f = Field::make(2, 5);
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const poly::Poly a = random_poly(f, 1 + rng.below(20), rng);
    poly::Poly b = random_poly(f, 1 + rng.below(8), rng);
    if (b.empty()) b = {Field::one()};
    const auto [quot, rem] = poly::divmod(f, a, b);
    EXPECT_LT(poly::degree(rem), poly::degree(b));
    EXPECT_EQ(poly::add(f, poly::mul(f, quot, b), rem), a);
  }
  EXPECT_THROW(poly::divmod(f, {Field::one()}, {}), std::domain_error);
}

TEST(Polynomial, FromRootsVanishesExactlyAtRoots) {
  const Field f = Field::make(2, 4);
  const std::vector<FieldElement> roots{{1}, {5}, {9}};
  const poly::Poly p = poly::from_roots(f, roots);
  EXPECT_EQ(poly::degree(p), 3);
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const bool is_root = x == 1 || x == 5 || x == 9;
    EXPECT_EQ(poly::eval(f, p, FieldElement{x}) == Field::zero(), is_root) << x;
  }
}

TEST(Polynomial, InterpolationRecoversPolynomial) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 6}, {5, 2}}) {
    const Field f = Field::make(p, m);
    Rng rng(p + m);
    for (int t = 0; t < 100; ++t) {
      const std::size_t deg = rng.below(10);
      poly::Poly g = random_poly(f, deg + 1, rng);
      std::vector<FieldElement> xs, ys;
      for (std::uint32_t x = 0; x < deg + 1; ++x) {
        xs.push_back(FieldElement{x});
        ys.push_back(poly::eval(f, g, FieldElement{x}));
      }
      EXPECT_EQ(poly::interpolate(f, xs, ys), g);
    }
  }
}

}  // namespace
}  // namespace lowdeg
