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
#include <optional>
#include <span>
#include <vector>

#include "lowdeg/field.hpp"

namespace lowdeg {

using MaybeSymbol = std::optional<FieldElement>;

/// A length-n word over F with erasures. A position is erased iff its value
/// is empty; the erasure set S is derived, so the two can never disagree.
class ReceivedWord {
 public:
  /// All positions erased.
  explicit ReceivedWord(std::size_t n) : values_(n) {}

  static ReceivedWord from_word(std::span<const FieldElement> word);

  std::size_t size() const noexcept { return values_.size(); }
  bool erased(std::size_t i) const { return !values_.at(i).has_value(); }
  /// Throws std::logic_error for an erased position.
  FieldElement value(std::size_t i) const;
  const std::vector<MaybeSymbol>& values() const noexcept { return values_; }

  void set(std::size_t i, FieldElement v) { values_.at(i) = v; }
  void erase(std::size_t i) { values_.at(i).reset(); }

  /// Sorted erasure set S.
  std::vector<std::size_t> erasures() const;
  std::size_t erasure_count() const noexcept;

 private:
  std::vector<MaybeSymbol> values_;
};

}  // namespace lowdeg
