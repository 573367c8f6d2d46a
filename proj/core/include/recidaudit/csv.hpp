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

#ifndef RECIDAUDIT_CSV_HPP_
#define RECIDAUDIT_CSV_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace recidaudit {

/// Materialized CSV content: header row plus data rows. Quoted fields,
/// embedded separators/newlines and doubled quotes are handled; CR/LF
/// and LF line endings both accepted. Short rows are padded with empty
/// cells so column lookups stay in bounds.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of the first column with this name; duplicated header names
  /// resolve to the first occurrence.
  std::optional<size_t> column_index(std::string_view name) const;
};

/// Parses a whole CSV document. Throws std::runtime_error on an
/// unterminated quoted field or a missing header row.
CsvTable parse_csv(std::string_view bytes);

/// Writes one row, quoting fields that contain separators, quotes or
/// newlines.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace recidaudit

#endif  // RECIDAUDIT_CSV_HPP_
