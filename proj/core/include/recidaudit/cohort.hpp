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

#ifndef RECIDAUDIT_COHORT_HPP_
#define RECIDAUDIT_COHORT_HPP_

#include <utility>
#include <vector>

#include "recidaudit/records.hpp"

namespace recidaudit {

/// The two upstream trims applied to the full defendant file before any
/// two-year construction: person ids at or above kTrimHighIdStart are
/// dropped, then rows flagged bad-data. Counts overlap, so the report
/// carries both the raw bad-data total and the net additional drop.
inline constexpr long kTrimHighIdStart = 11002;

struct TrimReport {
  long input = 0;
  long dropped_high_ids = 0;
  long dropped_bad_data = 0;           // all bad-data rows in the input
  long net_additional_bad_data = 0;    // bad-data rows not already high-id
  long remaining = 0;
};

std::pair<Cohort, TrimReport> apply_propublica_trims(
    std::vector<PersonRecord> records, Date data_end = kDefaultDataEnd,
    long high_id_start = kTrimHighIdStart);

enum class InclusionOutcome { KeptObserved, KeptRecidivistOnly, Dropped };

/// The OR rule under audit: kept when observed free for the whole window,
/// or when recidivating within the window — with no screen-date cutoff on
/// the recidivist branch.
InclusionOutcome classify_inclusion(const PersonRecord& r, const FaultyOrRule& rule);

/// Applies classify_inclusion over all records.
Cohort build_faulty_two_year(const std::vector<PersonRecord>& records,
                             FaultyOrRule rule);

/// The correction: keep exactly the records with screen_date <= cutoff
/// (inclusive; the flawed pipeline kept non-recidivists through the
/// cutoff day itself).
Cohort correct_two_year(const Cohort& cohort, Date cutoff = kDefaultCutoff);

/// Days observed outside custody in [screen_date, data_end): calendar
/// days minus custody time clipped to the window. A span with out < in
/// contributes its raw negative length, mirroring the upstream pipeline.
long free_days(const PersonRecord& r, Date data_end);

}  // namespace recidaudit

#endif  // RECIDAUDIT_COHORT_HPP_
