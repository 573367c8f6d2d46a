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

#ifndef RECIDAUDIT_CUTOFF_HPP_
#define RECIDAUDIT_CUTOFF_HPP_

#include <optional>
#include <vector>

#include "recidaudit/dates.hpp"
#include "recidaudit/records.hpp"

namespace recidaudit {

struct ObservedFractionBin {
  Date bin_start{};
  long n = 0;                       // non-recidivists screened in this bin
  std::optional<double> fraction;   // share observed >= window free days
  std::optional<double> smoothed;   // centered moving average, edge-truncated
};

/// For non-recidivists of the trimmed full cohort: per screen-date bin,
/// the fraction observed outside custody for at least window_days. This
/// locates how far before the nominal cutoff one must move to put both
/// outcome classes on equal footing.
std::vector<ObservedFractionBin> fraction_observed(const Cohort& full_trimmed,
                                                   int bin_width_days = 7,
                                                   int window_days = 730,
                                                   int smooth_window_bins = 9);

struct QuarterRates {
  YearQuarter quarter;
  long n = 0;
  std::optional<double> rate0;
  std::optional<double> rate1;
};

/// Outcome rates by screen-date year-quarter, 2013Q1..2014Q4.
std::vector<QuarterRates> quarterly_rates(const Cohort& two_year,
                                          LabelField label = LabelField::TwoYearRecid);

/// Rate after re-cutting the cohort at an alternative date; computed by
/// composing correct_two_year with recidivism_rate so the two paths
/// cannot diverge. Nullopt when the cut cohort is empty.
std::optional<double> rate_with_cutoff(const Cohort& two_year, Date cutoff,
                                       LabelField label = LabelField::TwoYearRecid);

}  // namespace recidaudit

#endif  // RECIDAUDIT_CUTOFF_HPP_
