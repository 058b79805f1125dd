// Copyright 2026 The dsky Authors.
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

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsky/datagen.h"

namespace dsky {
namespace {

// Splits one line on commas; double quotes group fields and "" escapes a
// quote. Embedded newlines are not supported.
std::vector<std::string> SplitRow(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

bool ParseNumber(std::string_view text, double& out) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && std::isfinite(out);
}

std::size_t ColumnIndex(const std::vector<std::string>& header,
                        const std::string& name, const std::string& path) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw InstanceError(path + ": no column named '" + name + "'");
}

}  // namespace

CsvData IngestCsv(const std::string& path, const CsvColumns& columns) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw InstanceError(path + ": empty file");
  const auto header = SplitRow(line);
  const std::size_t xi = ColumnIndex(header, columns.x, path);
  const std::size_t yi = ColumnIndex(header, columns.y, path);
  const std::size_t ki = columns.key ? ColumnIndex(header, *columns.key, path) : 0;

  CsvData data;
  std::map<std::pair<double, double>, std::size_t> first_row;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto fields = SplitRow(line);
    double x = 0, y = 0;
    if (fields.size() <= std::max({xi, yi, ki}) || !ParseNumber(fields[xi], x) ||
        !ParseNumber(fields[yi], y)) {
      ++data.skipped_rows;
      continue;
    }
    if (columns.negate_x) x = -x;
    if (columns.negate_y) y = -y;
    auto [it, fresh] = first_row.emplace(std::pair{x, y}, row);
    if (!fresh) {
      if (!columns.dedupe) {
        throw InstanceError(path + ": rows " + std::to_string(it->second) +
                            " and " + std::to_string(row) +
                            " have identical coordinates");
      }
      ++data.duplicate_rows;
      continue;
    }
    data.points.push_back({static_cast<PointId>(data.points.size()), x, y});
    if (columns.key) data.keys.push_back(fields[ki]);
  }
  if (data.points.empty()) throw InstanceError(path + ": no usable rows");
  return data;
}

}  // namespace dsky
