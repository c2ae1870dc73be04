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

#include "lowdeg/code_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lowdeg {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_error(std::size_t lineno, const std::string& what) {
  throw std::runtime_error("code file line " + std::to_string(lineno) + ": " +
                           what);
}

}  // namespace

LinearCode read_code(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) parse_error(lineno, "missing header");
  std::istringstream header(line);
  std::uint64_t q = 0, n = 0, dim = 0;
  if (!(header >> q >> n >> dim)) parse_error(lineno, "expected 'q n dim'");
  std::string extra;
  if (header >> extra) parse_error(lineno, "trailing tokens in header");
  if (q < 2 || q > Field::kMaxOrder) parse_error(lineno, "unsupported q");
  if (dim > n) parse_error(lineno, "dim exceeds n");

  Field field = [&] {
    try {
      return Field::of_order(static_cast<std::uint32_t>(q));
    } catch (const std::invalid_argument& e) {
      parse_error(lineno, e.what());
    }
  }();

  Matrix g(dim, n);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!next_content_line(in, line, lineno)) {
      parse_error(lineno, "expected " + std::to_string(dim) + " generator rows");
    }
    std::istringstream row(line);
    for (std::size_t c = 0; c < n; ++c) {
      std::uint64_t v = 0;
      if (!(row >> v)) parse_error(lineno, "row too short");
      if (v >= q) parse_error(lineno, "element index out of range");
      g(r, c) = FieldElement{static_cast<std::uint32_t>(v)};
    }
    if (row >> extra) parse_error(lineno, "row too long");
  }
  try {
    return LinearCode(field, n, std::move(g));
  } catch (const std::invalid_argument& e) {
    parse_error(lineno, e.what());
  }
}

void write_code(std::ostream& out, const LinearCode& code) {
  out << code.field().order() << ' ' << code.length() << ' '
      << code.dimension() << '\n';
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    const auto row = code.generator().row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << row[c].index;
    }
    out << '\n';
  }
}

LinearCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file " + path);
  return read_code(in);
}

void save_code(const std::string& path, const LinearCode& code) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write code file " + path);
  write_code(out, code);
}

}  // namespace lowdeg
