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

#ifndef RECIDAUDIT_RECORDS_HPP_
#define RECIDAUDIT_RECORDS_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "recidaudit/dates.hpp"

namespace recidaudit {

enum class Race { AfricanAmerican, Caucasian, Hispanic, Other, Asian, NativeAmerican };
enum class Sex { Female, Male };
enum class ScoreText { Low, Medium, High, NA };

/// Outcome flag as carried by the source data: -1 marks rows the data
/// collectors could not match to case records.
enum class RecidFlag { No = 0, Yes = 1, BadData = -1 };

/// Which outcome column an analysis reads.
enum class LabelField { IsRecid, TwoYearRecid };

std::string to_string(Race r);
std::string to_string(Sex s);
std::string to_string(ScoreText s);
std::optional<Race> race_from_string(std::string_view s);
std::optional<Sex> sex_from_string(std::string_view s);
std::optional<ScoreText> score_text_from_string(std::string_view s);

/// One custody stay. `out` may precede `in` in the source data; such
/// spans are kept as-is and contribute negative time (see free_days).
struct CustodySpan {
  DateTime in{};
  DateTime out{};
  auto operator<=>(const CustodySpan&) const = default;
};

/// One defendant row from either source file.
struct PersonRecord {
  long person_id = 0;
  std::optional<std::string> name_key;
  Date screen_date{};
  std::optional<Date> dob;
  std::optional<Race> race;
  std::optional<Sex> sex;
  int decile_score = 0;  // 1..10; -1 in rows whose score_text is NA
  ScoreText score_text = ScoreText::NA;
  RecidFlag is_recid = RecidFlag::No;
  std::optional<int> two_year_recid;  // absent in the full-scores file
  std::optional<Date> recid_offense_date;
  std::vector<CustodySpan> custody_spans;

  bool operator==(const PersonRecord&) const = default;

  /// Outcome under the given label field; nullopt when the field is
  /// absent or flagged bad.
  std::optional<bool> outcome(LabelField field) const {
    if (field == LabelField::IsRecid) {
      if (is_recid == RecidFlag::BadData) return std::nullopt;
      return is_recid == RecidFlag::Yes;
    }
    if (!two_year_recid) return std::nullopt;
    return *two_year_recid == 1;
  }

  bool has_usable_score() const {
    return score_text != ScoreText::NA && decile_score >= 1 && decile_score <= 10;
  }
};

/// Keep-everything rule: the cohort is the source file minus upstream trims.
struct FullTrimmedRule {
  auto operator<=>(const FullTrimmedRule&) const = default;
};

/// The flawed construction being audited: keep a person if observed for
/// at least window_days of free time, OR if they recidivate within
/// window_days of the screen date — with no screen-date cutoff on the
/// recidivist branch.
struct FaultyOrRule {
  int window_days = 730;
  Date data_end{};
  auto operator<=>(const FaultyOrRule&) const = default;
};

/// The corrected construction: keep only screen dates at or before cutoff.
struct ScreenDateCutoffRule {
  Date cutoff{};
  auto operator<=>(const ScreenDateCutoffRule&) const = default;
};

using InclusionRule = std::variant<FullTrimmedRule, FaultyOrRule, ScreenDateCutoffRule>;

/// An ordered, de-duplicated set of person records plus the provenance
/// of how they were selected.
class Cohort {
 public:
  Cohort() = default;

  /// Sorts by (screen_date, person_id) and validates id uniqueness;
  /// throws std::invalid_argument on a duplicate person_id.
  static Cohort build(std::vector<PersonRecord> records, InclusionRule rule,
                      Date data_end, LabelField label_field);

  const std::vector<PersonRecord>& records() const { return records_; }
  const InclusionRule& rule() const { return rule_; }
  Date data_end() const { return data_end_; }
  LabelField label_field() const { return label_field_; }
  size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  /// Earliest screen date; nullopt when empty.
  std::optional<Date> min_screen_date() const;

 private:
  std::vector<PersonRecord> records_;
  InclusionRule rule_{FullTrimmedRule{}};
  Date data_end_{};
  LabelField label_field_ = LabelField::TwoYearRecid;
};

/// Default constants of the audited construction: data collection ended
/// 2016-04-01, the implied screen-date cutoff is two years earlier, and
/// the follow-up window is two 365-day years.
inline const Date kDefaultDataEnd = Date{std::chrono::year{2016} / 4 / 1};
inline const Date kDefaultCutoff = Date{std::chrono::year{2014} / 4 / 1};
inline constexpr int kDefaultWindowDays = 730;

}  // namespace recidaudit

#endif  // RECIDAUDIT_RECORDS_HPP_
