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

#include <span>
#include <utility>
#include <vector>

#include "lowdeg/field.hpp"

// Dense univariate polynomials over a Field, coefficients lowest degree
// first. All results are trimmed (no trailing zeros); the zero polynomial is
// the empty vector.
namespace lowdeg::poly {

using Poly = std::vector<FieldElement>;

void trim(Poly& a);

/// Degree, or -1 for the zero polynomial.
long degree(const Poly& a);

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly scale(const Field& f, const Poly& a, FieldElement c);

/// Quotient and remainder. Throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);

FieldElement eval(const Field& f, const Poly& a, FieldElement x);

/// prod_i (x - roots[i]).
Poly from_roots(const Field& f, std::span<const FieldElement> roots);

/// Unique polynomial of degree < points.size() through (points[i],
/// values[i]); Newton divided differences, O(N^2). Points must be distinct.
Poly interpolate(const Field& f, std::span<const FieldElement> points,
                 std::span<const FieldElement> values);

}  // namespace lowdeg::poly
