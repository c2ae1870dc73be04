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

#include "lowdeg/received_word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lowdeg {

ReceivedWord ReceivedWord::from_word(std::span<const FieldElement> word) {
  ReceivedWord r(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) r.values_[i] = word[i];
  return r;
}

FieldElement ReceivedWord::value(std::size_t i) const {
  const auto& v = values_.at(i);
  if (!v) throw std::logic_error("position " + std::to_string(i) + " is erased");
  return *v;
}

std::vector<std::size_t> ReceivedWord::erasures() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i]) s.push_back(i);
  }
  return s;
}

std::size_t ReceivedWord::erasure_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      values_.begin(), values_.end(), [](const MaybeSymbol& v) { return !v; }));
}

}  // namespace lowdeg
