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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lowdeg/linear_code.hpp"

namespace lowdeg {

// Plain-text code format:
//
//   q n dim
//   g_00 g_01 ... g_0(n-1)
//   ...                      (dim generator rows of element indices)
//
// Blank lines and lines starting with '#' are ignored.

/// Throws std::runtime_error with a line number on malformed input.
LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& code);

LinearCode load_code(const std::string& path);
void save_code(const std::string& path, const LinearCode& code);

}  // namespace lowdeg
