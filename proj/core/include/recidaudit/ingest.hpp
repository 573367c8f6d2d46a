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

#ifndef RECIDAUDIT_INGEST_HPP_
#define RECIDAUDIT_INGEST_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "recidaudit/records.hpp"

namespace recidaudit {

/// Fatal ingestion problem: a required column is missing entirely.
/// Cell-level problems never throw; they become findings.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

enum class Severity { Info, Warn, Reject };

enum class FindingCode {
  BadDataFlag,          // is_recid == -1: no case record could be matched
  MissingScore,         // score_text N/A; excluded from score-based metrics
  NegativeCustodySpan,  // custody out precedes in; kept, contributes negative time
  RecidBeforeScreen,    // offense date precedes the screen date
  UnparseableDate,      // required date cell malformed; row rejected
  DuplicateId,          // repeated person_id; first occurrence kept
  UnrecognizedValue,    // cell value outside the column's known vocabulary
};

std::string to_string(Severity s);
std::string to_string(FindingCode c);

/// Row-level validation outcome. Reject findings mark records that must
/// not enter analysis cohorts; they are preserved in the report either way.
struct ValidationFinding {
  long person_id = 0;
  Severity severity = Severity::Info;
  FindingCode code = FindingCode::BadDataFlag;
  std::string detail;

  bool operator==(const ValidationFinding&) const = default;
};

struct ParseResult {
  std::vector<PersonRecord> records;
  std::vector<ValidationFinding> findings;
  /// Rows that produced no record (unparseable required cell or duplicate
  /// person_id). Together with records.size() this accounts for every
  /// input row.
  long rejected_rows = 0;
};

/// Parses the full-scores export. Required columns: id,
/// compas_screening_date, decile_score, score_text, is_recid. Rows are
/// never dropped silently: is_recid = -1 and score_text N/A rows are
/// retained with findings; only rows whose required cells cannot be
/// parsed are withheld (counted in rejected_rows).
ParseResult parse_full_scores(std::string_view bytes);

/// Parses the two-year export. Same contract as parse_full_scores with
/// additional required columns: two_year_recid, race, sex, c_jail_in,
/// c_jail_out, r_offense_date.
ParseResult parse_two_year(std::string_view bytes);

/// Serializes records back to the source CSV schema (the inverse of the
/// parsers for the schema columns).
void write_records_csv(const std::vector<PersonRecord>& records,
                       std::ostream& out, bool two_year_schema);

/// Normalized record stream: one JSON object per line, field names as in
/// PersonRecord, optional fields omitted when absent.
void write_records_jsonl(const std::vector<PersonRecord>& records,
                         std::ostream& out);
std::vector<PersonRecord> read_records_jsonl(std::istream& in);

std::string read_file(const std::string& path);

}  // namespace recidaudit

#endif  // RECIDAUDIT_INGEST_HPP_
