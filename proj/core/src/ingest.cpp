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

#include "recidaudit/ingest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "recidaudit/csv.hpp"

namespace recidaudit {

namespace {

using nlohmann::json;

std::optional<long> parse_long(std::string_view s) {
  long value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || s.empty()) return std::nullopt;
  return value;
}

/// Column accessors for one schema variant. The source files carry dozens
/// of extra columns (and some duplicated header names); lookups bind to
/// the first occurrence and everything else is ignored.
struct ColumnMap {
  const CsvTable& table;
  size_t id, screen_date, decile_score, score_text, is_recid;
  std::optional<size_t> name, dob, race, sex, two_year_recid,
      r_offense_date, c_jail_in, c_jail_out;

  static ColumnMap resolve(const CsvTable& t, bool two_year_schema) {
    auto require = [&](std::string_view col) {
      const auto idx = t.column_index(col);
      if (!idx) {
        throw SchemaError("missing required column: " + std::string(col));
      }
      return *idx;
    };
    ColumnMap m{.table = t,
                .id = require("id"),
                .screen_date = require("compas_screening_date"),
                .decile_score = require("decile_score"),
                .score_text = require("score_text"),
                .is_recid = require("is_recid")};
    m.name = t.column_index("name");
    m.dob = t.column_index("dob");
    if (two_year_schema) {
      m.two_year_recid = require("two_year_recid");
      m.race = require("race");
      m.sex = require("sex");
      m.c_jail_in = require("c_jail_in");
      m.c_jail_out = require("c_jail_out");
      m.r_offense_date = require("r_offense_date");
    } else {
      m.race = t.column_index("race");
      m.sex = t.column_index("sex");
      m.c_jail_in = t.column_index("c_jail_in");
      m.c_jail_out = t.column_index("c_jail_out");
      m.r_offense_date = t.column_index("r_offense_date");
    }
    return m;
  }
};

class RowParser {
 public:
  RowParser(const ColumnMap& cols, bool two_year_schema, ParseResult& out)
      : cols_(cols), two_year_(two_year_schema), out_(out) {}

  void parse_row(const std::vector<std::string>& row, size_t row_number) {
    const std::string& id_cell = row[cols_.id];
    const auto id = parse_long(id_cell);
    if (!id || *id <= 0) {
      reject(0, FindingCode::UnrecognizedValue,
             "row " + std::to_string(row_number) + ": bad id '" + id_cell + "'");
      return;
    }
    PersonRecord r;
    r.person_id = *id;

    const auto screen = parse_date(row[cols_.screen_date]);
    if (!screen) {
      reject(r.person_id, FindingCode::UnparseableDate,
             "compas_screening_date '" + row[cols_.screen_date] + "'");
      return;
    }
    r.screen_date = *screen;

    const auto decile = parse_long(row[cols_.decile_score]);
    if (!decile) {
      reject(r.person_id, FindingCode::UnrecognizedValue,
             "decile_score '" + row[cols_.decile_score] + "'");
      return;
    }
    r.decile_score = int(*decile);

    const std::string& score_cell = row[cols_.score_text];
    if (const auto st = score_text_from_string(score_cell)) {
      r.score_text = *st;
    } else if (score_cell.empty()) {
      r.score_text = ScoreText::NA;
    } else {
      warn(r.person_id, FindingCode::UnrecognizedValue,
           "score_text '" + score_cell + "'");
      r.score_text = ScoreText::NA;
    }
    if (r.score_text == ScoreText::NA) {
      warn(r.person_id, FindingCode::MissingScore,
           "score_text missing (decile_score " +
               std::to_string(r.decile_score) + ")");
    } else if (r.decile_score < 1 || r.decile_score > 10) {
      warn(r.person_id, FindingCode::UnrecognizedValue,
           "decile_score " + std::to_string(r.decile_score) +
               " outside [1,10] for scored row");
    }

    const auto recid = parse_long(row[cols_.is_recid]);
    if (!recid || (*recid != -1 && *recid != 0 && *recid != 1)) {
      reject(r.person_id, FindingCode::UnrecognizedValue,
             "is_recid '" + row[cols_.is_recid] + "'");
      return;
    }
    r.is_recid = RecidFlag(*recid);
    if (r.is_recid == RecidFlag::BadData) {
      finding(r.person_id, Severity::Reject, FindingCode::BadDataFlag,
              "is_recid = -1: no matching case record");
    }

    if (two_year_) {
      const auto two_year = parse_long(row[*cols_.two_year_recid]);
      if (!two_year || (*two_year != 0 && *two_year != 1)) {
        reject(r.person_id, FindingCode::UnrecognizedValue,
               "two_year_recid '" + row[*cols_.two_year_recid] + "'");
        return;
      }
      r.two_year_recid = int(*two_year);
    }

    if (cols_.name && !row[*cols_.name].empty()) r.name_key = row[*cols_.name];
    parse_optional_date(row, cols_.dob, r.person_id, "dob", r.dob);
    parse_enum_cell(row, cols_.race, r.person_id, "race", r.race,
                    race_from_string);
    parse_enum_cell(row, cols_.sex, r.person_id, "sex", r.sex,
                    sex_from_string);

    if (r.is_recid == RecidFlag::Yes) {
      std::optional<Date> offense;
      if (cols_.r_offense_date) {
        const std::string& cell = row[*cols_.r_offense_date];
        if (!cell.empty()) offense = parse_date(cell);
      }
      if (!offense) {
        reject(r.person_id, FindingCode::UnparseableDate,
               "r_offense_date required for recidivist row");
        return;
      }
      r.recid_offense_date = offense;
      if (*offense < r.screen_date) {
        warn(r.person_id, FindingCode::RecidBeforeScreen,
             "offense " + format_date(*offense) + " precedes screen " +
                 format_date(r.screen_date));
      }
    }

    parse_custody(row, r);

    if (!seen_ids_.insert(r.person_id).second) {
      warn(r.person_id, FindingCode::DuplicateId,
           "duplicate person_id; first occurrence kept");
      out_.rejected_rows += 1;
      return;
    }
    out_.records.push_back(std::move(r));
  }

 private:
  void finding(long id, Severity sev, FindingCode code, std::string detail) {
    out_.findings.push_back(ValidationFinding{id, sev, code, std::move(detail)});
  }
  void warn(long id, FindingCode code, std::string detail) {
    finding(id, Severity::Warn, code, std::move(detail));
  }
  void reject(long id, FindingCode code, std::string detail) {
    finding(id, Severity::Reject, code, std::move(detail));
    out_.rejected_rows += 1;
  }

  void parse_optional_date(const std::vector<std::string>& row,
                           std::optional<size_t> col, long id,
                           std::string_view name, std::optional<Date>& out) {
    if (!col) return;
    const std::string& cell = row[*col];
    if (cell.empty()) return;  // empty optional cell: absent, no finding
    if (const auto d = parse_date(cell)) {
      out = d;
    } else {
      warn(id, FindingCode::UnparseableDate,
           std::string(name) + " '" + cell + "'");
    }
  }

  template <typename T, typename Fn>
  void parse_enum_cell(const std::vector<std::string>& row,
                       std::optional<size_t> col, long id,
                       std::string_view name, std::optional<T>& out,
                       Fn from_string) {
    if (!col) return;
    const std::string& cell = row[*col];
    if (cell.empty()) return;
    if (const auto v = from_string(cell)) {
      out = v;
    } else {
      warn(id, FindingCode::UnrecognizedValue,
           std::string(name) + " '" + cell + "'");
    }
  }

  void parse_custody(const std::vector<std::string>& row, PersonRecord& r) {
    if (!cols_.c_jail_in || !cols_.c_jail_out) return;
    const std::string& in_cell = row[*cols_.c_jail_in];
    const std::string& out_cell = row[*cols_.c_jail_out];
    if (in_cell.empty() && out_cell.empty()) return;
    if (in_cell.empty() || out_cell.empty()) {
      warn(r.person_id, FindingCode::UnparseableDate,
           "custody span missing one endpoint");
      return;
    }
    const auto in = parse_datetime(in_cell);
    const auto out = parse_datetime(out_cell);
    if (!in || !out) {
      warn(r.person_id, FindingCode::UnparseableDate,
           "custody span '" + in_cell + "' / '" + out_cell + "'");
      return;
    }
    if (*out < *in) {
      // Kept: such spans contribute negative time downstream.
      warn(r.person_id, FindingCode::NegativeCustodySpan,
           "c_jail_out precedes c_jail_in by " +
               std::to_string((*in - *out).count()) + "s");
    }
    r.custody_spans.push_back(CustodySpan{*in, *out});
  }

  const ColumnMap& cols_;
  bool two_year_;
  ParseResult& out_;
  std::unordered_set<long> seen_ids_;
};

ParseResult parse_records(std::string_view bytes, bool two_year_schema) {
  const CsvTable table = parse_csv(bytes);
  const ColumnMap cols = ColumnMap::resolve(table, two_year_schema);
  ParseResult result;
  result.records.reserve(table.rows.size());
  RowParser parser(cols, two_year_schema, result);
  for (size_t i = 0; i < table.rows.size(); ++i) {
    parser.parse_row(table.rows[i], i + 2);  // 1-based, after header
  }
  return result;
}

std::string cell_or_empty(const std::optional<Date>& d) {
  return d ? format_date(*d) : std::string();
}

}  // namespace

std::string to_string(Severity s) {
  switch (s) {
    case Severity::Info: return "info";
    case Severity::Warn: return "warn";
    case Severity::Reject: return "reject";
  }
  return "?";
}

std::string to_string(FindingCode c) {
  switch (c) {
    case FindingCode::BadDataFlag: return "bad_data_flag";
    case FindingCode::MissingScore: return "missing_score";
    case FindingCode::NegativeCustodySpan: return "negative_custody_span";
    case FindingCode::RecidBeforeScreen: return "recid_before_screen";
    case FindingCode::UnparseableDate: return "unparseable_date";
    case FindingCode::DuplicateId: return "duplicate_id";
    case FindingCode::UnrecognizedValue: return "unrecognized_value";
  }
  return "?";
}

ParseResult parse_full_scores(std::string_view bytes) {
  return parse_records(bytes, /*two_year_schema=*/false);
}

ParseResult parse_two_year(std::string_view bytes) {
  return parse_records(bytes, /*two_year_schema=*/true);
}

void write_records_csv(const std::vector<PersonRecord>& records,
                       std::ostream& out, bool two_year_schema) {
  std::vector<std::string> header = {
      "id",        "name",          "compas_screening_date",
      "dob",       "race",          "sex",
      "decile_score", "score_text", "is_recid",
      "r_offense_date", "c_jail_in", "c_jail_out"};
  if (two_year_schema) header.push_back("two_year_recid");
  write_csv_row(out, header);
  for (const auto& r : records) {
    std::vector<std::string> row;
    row.push_back(std::to_string(r.person_id));
    row.push_back(r.name_key.value_or(""));
    row.push_back(format_date(r.screen_date));
    row.push_back(cell_or_empty(r.dob));
    row.push_back(r.race ? to_string(*r.race) : "");
    row.push_back(r.sex ? to_string(*r.sex) : "");
    row.push_back(std::to_string(r.decile_score));
    row.push_back(to_string(r.score_text));
    row.push_back(std::to_string(int(r.is_recid)));
    row.push_back(cell_or_empty(r.recid_offense_date));
    if (r.custody_spans.empty()) {
      row.push_back("");
      row.push_back("");
    } else {
      row.push_back(format_datetime(r.custody_spans.front().in));
      row.push_back(format_datetime(r.custody_spans.front().out));
    }
    if (two_year_schema) {
      row.push_back(r.two_year_recid ? std::to_string(*r.two_year_recid) : "");
    }
    write_csv_row(out, row);
  }
}

void write_records_jsonl(const std::vector<PersonRecord>& records,
                         std::ostream& out) {
  for (const auto& r : records) {
    json j;
    j["person_id"] = r.person_id;
    if (r.name_key) j["name_key"] = *r.name_key;
    j["screen_date"] = format_date(r.screen_date);
    if (r.dob) j["dob"] = format_date(*r.dob);
    if (r.race) j["race"] = to_string(*r.race);
    if (r.sex) j["sex"] = to_string(*r.sex);
    j["decile_score"] = r.decile_score;
    j["score_text"] = to_string(r.score_text);
    j["is_recid"] = int(r.is_recid);
    if (r.two_year_recid) j["two_year_recid"] = *r.two_year_recid;
    if (r.recid_offense_date)
      j["recid_offense_date"] = format_date(*r.recid_offense_date);
    if (!r.custody_spans.empty()) {
      json spans = json::array();
      for (const auto& s : r.custody_spans) {
        spans.push_back({{"in", format_datetime(s.in)},
                         {"out", format_datetime(s.out)}});
      }
      j["custody_spans"] = std::move(spans);
    }
    out << j.dump() << '\n';
  }
}

std::vector<PersonRecord> read_records_jsonl(std::istream& in) {
  std::vector<PersonRecord> records;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error("jsonl line " + std::to_string(line_no) + ": " +
                               e.what());
    }
    PersonRecord r;
    r.person_id = j.at("person_id").get<long>();
    if (j.contains("name_key")) r.name_key = j["name_key"].get<std::string>();
    const auto screen = parse_date(j.at("screen_date").get<std::string>());
    if (!screen) {
      throw std::runtime_error("jsonl line " + std::to_string(line_no) +
                               ": bad screen_date");
    }
    r.screen_date = *screen;
    if (j.contains("dob")) r.dob = parse_date(j["dob"].get<std::string>());
    if (j.contains("race")) r.race = race_from_string(j["race"].get<std::string>());
    if (j.contains("sex")) r.sex = sex_from_string(j["sex"].get<std::string>());
    r.decile_score = j.at("decile_score").get<int>();
    r.score_text =
        score_text_from_string(j.at("score_text").get<std::string>())
            .value_or(ScoreText::NA);
    r.is_recid = RecidFlag(j.at("is_recid").get<int>());
    if (j.contains("two_year_recid"))
      r.two_year_recid = j["two_year_recid"].get<int>();
    if (j.contains("recid_offense_date"))
      r.recid_offense_date =
          parse_date(j["recid_offense_date"].get<std::string>());
    if (j.contains("custody_spans")) {
      for (const auto& s : j["custody_spans"]) {
        const auto in_t = parse_datetime(s.at("in").get<std::string>());
        const auto out_t = parse_datetime(s.at("out").get<std::string>());
        if (in_t && out_t) r.custody_spans.push_back(CustodySpan{*in_t, *out_t});
      }
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace recidaudit
