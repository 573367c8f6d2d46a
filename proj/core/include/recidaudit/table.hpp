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

#ifndef RECIDAUDIT_TABLE_HPP_
#define RECIDAUDIT_TABLE_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace recidaudit {

/// One table cell. monostate renders as an empty CSV cell / JSON null —
/// the explicit marker for undefined ratios.
using TableCell = std::variant<std::monostate, long, double, std::string>;

inline TableCell cell(std::optional<double> v) {
  if (!v) return std::monostate{};
  return *v;
}

/// A small named table with stable kebab-case column names. Rates are
/// kept at full precision internally; rate_digits only controls CSV
/// display (3 for three-digit reference tables, 2 for two-digit ones).
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<TableCell>> rows;
  int rate_digits = 3;

  Table(std::string name_, std::vector<std::string> columns_,
        int rate_digits_ = 3)
      : name(std::move(name_)),
        columns(std::move(columns_)),
        rate_digits(rate_digits_) {}

  void add_row(std::vector<TableCell> row) { rows.push_back(std::move(row)); }

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

}  // namespace recidaudit

#endif  // RECIDAUDIT_TABLE_HPP_
