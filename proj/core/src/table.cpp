// Copyright 2026 The recidaudit Authors
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

#include "recidaudit/table.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "recidaudit/csv.hpp"

namespace recidaudit {

namespace {

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string Table::to_csv() const {
  std::ostringstream out;
  write_csv_row(out, columns);
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& c : row) {
      if (std::holds_alternative<std::monostate>(c)) {
        cells.emplace_back();
      } else if (const auto* i = std::get_if<long>(&c)) {
        cells.push_back(std::to_string(*i));
      } else if (const auto* d = std::get_if<double>(&c)) {
        cells.push_back(format_double(*d, rate_digits));
      } else {
        cells.push_back(std::get<std::string>(c));
      }
    }
    write_csv_row(out, cells);
  }
  return std::move(out).str();
}

nlohmann::json Table::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["columns"] = columns;
  auto rows_json = nlohmann::json::array();
  for (const auto& row : rows) {
    auto row_json = nlohmann::json::array();
    for (const auto& c : row) {
      if (std::holds_alternative<std::monostate>(c)) {
        row_json.push_back(nullptr);
      } else if (const auto* i = std::get_if<long>(&c)) {
        row_json.push_back(*i);
      } else if (const auto* d = std::get_if<double>(&c)) {
        row_json.push_back(*d);
      } else {
        row_json.push_back(std::get<std::string>(c));
      }
    }
    rows_json.push_back(std::move(row_json));
  }
  j["rows"] = std::move(rows_json);
  return j;
}

}  // namespace recidaudit
