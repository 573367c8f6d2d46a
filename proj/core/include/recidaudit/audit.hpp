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

#ifndef RECIDAUDIT_AUDIT_HPP_
#define RECIDAUDIT_AUDIT_HPP_

#include <optional>
#include <vector>

#include "recidaudit/records.hpp"

namespace recidaudit {

/// Outcome label (rows) versus pre/post cutoff screen date (columns),
/// with margins. Bad-data rows are excluded.
struct PrePostTable {
  long pre_negatives = 0;
  long post_negatives = 0;
  long pre_positives = 0;
  long post_positives = 0;

  long negatives() const { return pre_negatives + post_negatives; }
  long positives() const { return pre_positives + post_positives; }
  long pre() const { return pre_negatives + pre_positives; }
  long post() const { return post_negatives + post_positives; }
  long total() const { return pre() + post(); }

  bool operator==(const PrePostTable&) const = default;
};

PrePostTable prepost_contingency(const Cohort& cohort, Date cutoff,
                                 LabelField label);

enum class AuditVerdict { Symmetric, AsymmetricPositives, AsymmetricNegatives };

std::string to_string(AuditVerdict v);

/// Findings of the label-conditional censoring check. The verdict is
/// exact by design: an asymmetry requires a strictly empty opposite cell,
/// which is the signature the audited construction leaves behind.
struct AuditReport {
  Date cutoff{};
  long post_cutoff_positives = 0;
  long post_cutoff_negatives = 0;
  long pre_cutoff_positives = 0;
  long pre_cutoff_negatives = 0;
  /// post-cutoff positives over all positives; 0 when nothing is post-cutoff.
  std::optional<double> excess_share;
  /// post-cutoff positives over pre-cutoff positives.
  std::optional<double> excess_ratio;
  AuditVerdict verdict = AuditVerdict::Symmetric;
};

AuditReport censoring_asymmetry(const Cohort& cohort, Date cutoff,
                                LabelField label);

struct DateBin {
  Date bin_start{};
  int width_days = 7;
  long count = 0;
};

/// One histogram series; `label` is nullopt for the unsplit series and
/// for records whose label is undefined in split mode.
struct HistogramSeries {
  std::optional<bool> label;
  std::vector<DateBin> bins;
};

/// Histogram of screen dates in fixed-width bins anchored at the cohort's
/// minimum screen date; optionally one series per outcome label. Throws
/// std::domain_error when width_days < 1.
std::vector<HistogramSeries> histogram_by_screen_date(
    const Cohort& cohort, int width_days = 7,
    std::optional<LabelField> split_by_label = std::nullopt);

}  // namespace recidaudit

#endif  // RECIDAUDIT_AUDIT_HPP_
