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

#include "recidaudit/cohort.hpp"

#include <algorithm>
#include <cmath>

namespace recidaudit {

std::pair<Cohort, TrimReport> apply_propublica_trims(
    std::vector<PersonRecord> records, Date data_end, long high_id_start) {
  TrimReport report;
  report.input = long(records.size());
  for (const auto& r : records) {
    const bool high_id = r.person_id >= high_id_start;
    const bool bad = r.is_recid == RecidFlag::BadData;
    if (high_id) report.dropped_high_ids += 1;
    if (bad) {
      report.dropped_bad_data += 1;
      if (!high_id) report.net_additional_bad_data += 1;
    }
  }
  std::erase_if(records, [&](const PersonRecord& r) {
    return r.person_id >= high_id_start || r.is_recid == RecidFlag::BadData;
  });
  report.remaining = long(records.size());
  return {Cohort::build(std::move(records), FullTrimmedRule{}, data_end,
                        LabelField::IsRecid),
          report};
}

InclusionOutcome classify_inclusion(const PersonRecord& r,
                                    const FaultyOrRule& rule) {
  if (free_days(r, rule.data_end) >= rule.window_days) {
    return InclusionOutcome::KeptObserved;
  }
  if (r.is_recid == RecidFlag::Yes && r.recid_offense_date) {
    const long days = days_between(r.screen_date, *r.recid_offense_date);
    if (days >= 0 && days <= rule.window_days) {
      return InclusionOutcome::KeptRecidivistOnly;
    }
  }
  return InclusionOutcome::Dropped;
}

Cohort build_faulty_two_year(const std::vector<PersonRecord>& records,
                             FaultyOrRule rule) {
  std::vector<PersonRecord> kept;
  kept.reserve(records.size());
  for (const auto& r : records) {
    if (classify_inclusion(r, rule) != InclusionOutcome::Dropped) {
      kept.push_back(r);
    }
  }
  return Cohort::build(std::move(kept), rule, rule.data_end,
                       LabelField::TwoYearRecid);
}

Cohort correct_two_year(const Cohort& cohort, Date cutoff) {
  std::vector<PersonRecord> kept;
  kept.reserve(cohort.size());
  for (const auto& r : cohort.records()) {
    if (r.screen_date <= cutoff) kept.push_back(r);
  }
  return Cohort::build(std::move(kept), ScreenDateCutoffRule{cutoff},
                       cohort.data_end(), cohort.label_field());
}

long free_days(const PersonRecord& r, Date data_end) {
  const long calendar = days_between(r.screen_date, data_end);
  const DateTime window_start{r.screen_date};
  const DateTime window_end{data_end};
  double custody_seconds = 0;
  for (const auto& span : r.custody_spans) {
    if (span.out < span.in) {
      custody_seconds += double((span.out - span.in).count());
      continue;
    }
    const DateTime lo = std::max(span.in, window_start);
    const DateTime hi = std::min(span.out, window_end);
    if (hi > lo) custody_seconds += double((hi - lo).count());
  }
  return calendar - long(std::llround(custody_seconds / 86400.0));
}

}  // namespace recidaudit
