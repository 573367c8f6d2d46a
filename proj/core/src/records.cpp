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

#include "recidaudit/records.hpp"

#include <algorithm>
#include <stdexcept>

namespace recidaudit {

std::string to_string(Race r) {
  switch (r) {
    case Race::AfricanAmerican: return "African-American";
    case Race::Caucasian: return "Caucasian";
    case Race::Hispanic: return "Hispanic";
    case Race::Other: return "Other";
    case Race::Asian: return "Asian";
    case Race::NativeAmerican: return "Native American";
  }
  return "?";
}

std::string to_string(Sex s) { return s == Sex::Female ? "Female" : "Male"; }

std::string to_string(ScoreText s) {
  switch (s) {
    case ScoreText::Low: return "Low";
    case ScoreText::Medium: return "Medium";
    case ScoreText::High: return "High";
    case ScoreText::NA: return "N/A";
  }
  return "?";
}

std::optional<Race> race_from_string(std::string_view s) {
  if (s == "African-American") return Race::AfricanAmerican;
  if (s == "Caucasian") return Race::Caucasian;
  if (s == "Hispanic") return Race::Hispanic;
  if (s == "Other") return Race::Other;
  if (s == "Asian") return Race::Asian;
  if (s == "Native American") return Race::NativeAmerican;
  return std::nullopt;
}

std::optional<Sex> sex_from_string(std::string_view s) {
  if (s == "Female") return Sex::Female;
  if (s == "Male") return Sex::Male;
  return std::nullopt;
}

std::optional<ScoreText> score_text_from_string(std::string_view s) {
  if (s == "Low") return ScoreText::Low;
  if (s == "Medium") return ScoreText::Medium;
  if (s == "High") return ScoreText::High;
  if (s == "N/A") return ScoreText::NA;
  return std::nullopt;
}

Cohort Cohort::build(std::vector<PersonRecord> records, InclusionRule rule,
                     Date data_end, LabelField label_field) {
  std::sort(records.begin(), records.end(),
            [](const PersonRecord& a, const PersonRecord& b) {
              if (a.screen_date != b.screen_date)
                return a.screen_date < b.screen_date;
              return a.person_id < b.person_id;
            });
  std::vector<long> ids;
  ids.reserve(records.size());
  for (const auto& r : records) ids.push_back(r.person_id);
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw std::invalid_argument("duplicate person_id in cohort");
  }
  Cohort c;
  c.records_ = std::move(records);
  c.rule_ = rule;
  c.data_end_ = data_end;
  c.label_field_ = label_field;
  return c;
}

std::optional<Date> Cohort::min_screen_date() const {
  if (records_.empty()) return std::nullopt;
  // records are sorted by (screen_date, person_id)
  return records_.front().screen_date;
}

}  // namespace recidaudit
