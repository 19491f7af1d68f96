// Copyright 2026 The dks Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dks/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dks {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r'))
    --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

bool parse_field(const std::string& field, double& out) {
  if (field.empty()) return false;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last) return false;
  return std::isfinite(out);
}

}  // namespace

PointSet load_csv(const std::string& path, int dim) {
  if (dim < 1) throw std::invalid_argument("load_csv: dim must be >= 1");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_csv: cannot open " + path);

  std::vector<double> coords;
  std::string line;
  std::size_t lineno = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty()) {
      // Only trailing blank lines are tolerated.
      std::string rest;
      while (std::getline(in, rest))
        if (!trim(rest).empty())
          throw std::runtime_error("load_csv: " + path + ": blank line " +
                                   std::to_string(lineno));
      break;
    }
    const std::vector<std::string> fields = split_fields(stripped);

    if (first_row) {
      first_row = false;
      bool numeric = true;
      double tmp;
      for (const auto& f : fields)
        if (!parse_field(f, tmp)) {
          numeric = false;
          break;
        }
      if (!numeric) continue;  // header row
    }

    if (static_cast<int>(fields.size()) != dim)
      throw std::runtime_error("load_csv: " + path + ": line " +
                               std::to_string(lineno) + " has " +
                               std::to_string(fields.size()) +
                               " fields, expected " + std::to_string(dim));
    for (const auto& f : fields) {
      double v;
      if (!parse_field(f, v))
        throw std::runtime_error("load_csv: " + path + ": line " +
                                 std::to_string(lineno) +
                                 ": unparseable field '" + f + "'");
      coords.push_back(v);
    }
  }
  return PointSet(dim, std::move(coords));
}

void save_csv(const std::string& path, const PointSet& ps) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_csv: cannot open " + path);
  char buf[64];
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::string row;
    for (int j = 0; j < ps.dim(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", ps.coord(i, j));
      if (j) row += ',';
      row += buf;
    }
    out << row << '\n';
  }
  if (!out) throw std::runtime_error("save_csv: write failed for " + path);
}

}  // namespace dks
