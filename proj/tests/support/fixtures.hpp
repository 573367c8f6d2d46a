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

#ifndef RECIDAUDIT_TESTS_FIXTURES_HPP_
#define RECIDAUDIT_TESTS_FIXTURES_HPP_

#include <vector>

#include "recidaudit/cohort.hpp"
#include "recidaudit/records.hpp"

namespace fixtures {

using recidaudit::Cohort;
using recidaudit::Date;
using recidaudit::LabelField;
using recidaudit::PersonRecord;
using recidaudit::RecidFlag;
using recidaudit::ScoreText;

/// A minimal consistent record; tweak fields per test.
inline PersonRecord person(long id, Date screen, int decile, bool two_year) {
  PersonRecord r;
  r.person_id = id;
  r.screen_date = screen;
  r.decile_score = decile;
  r.score_text = decile <= 4   ? ScoreText::Low
                 : decile <= 7 ? ScoreText::Medium
                               : ScoreText::High;
  r.is_recid = two_year ? RecidFlag::Yes : RecidFlag::No;
  r.two_year_recid = two_year ? 1 : 0;
  if (two_year) {
    r.recid_offense_date = recidaudit::add_days(screen, 100);
  }
  return r;
}

inline Cohort cohort_of(std::vector<PersonRecord> records,
                        LabelField label = LabelField::TwoYearRecid) {
  return Cohort::build(std::move(records), recidaudit::FullTrimmedRule{},
                       recidaudit::kDefaultDataEnd, label);
}

}  // namespace fixtures

#endif  // RECIDAUDIT_TESTS_FIXTURES_HPP_
