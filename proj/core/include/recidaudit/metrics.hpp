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

#ifndef RECIDAUDIT_METRICS_HPP_
#define RECIDAUDIT_METRICS_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "recidaudit/confusion.hpp"
#include "recidaudit/records.hpp"

namespace recidaudit {

enum class GroupDimension { All, Race, Sex, Decile, YearQuarter };

/// Key of one group within a grouping dimension. Records whose grouping
/// attribute is unknown fall outside the partition.
struct GroupKey {
  GroupDimension dimension = GroupDimension::All;
  std::variant<std::monostate, Race, Sex, int, YearQuarter> value;

  auto operator<=>(const GroupKey&) const = default;
};

std::string to_string(const GroupKey& key);

struct RateResult {
  long n0 = 0;
  long n1 = 0;
  std::optional<double> rate;  // n1 / (n0 + n1); nullopt on empty cohort
};

RateResult recidivism_rate(const Cohort& cohort, LabelField label);

struct ConfusionResult {
  ConfusionMatrix matrix;
  /// Records with score_text N/A (or an out-of-range decile), excluded
  /// from the matrix per the upstream convention.
  long excluded_missing_score = 0;
};

/// Outcome label vs binarized decile score (High = positive prediction).
ConfusionResult confusion(const Cohort& cohort, LabelField label);

struct GroupedConfusion {
  ConfusionMatrix matrix;
  ConfusionStats stats;
  long excluded_missing_score = 0;
};

/// Per-group confusion matrices. Supported dimensions: All, Race, Sex;
/// throws std::invalid_argument otherwise.
std::map<GroupKey, GroupedConfusion> grouped_confusion(const Cohort& cohort,
                                                       LabelField label,
                                                       GroupDimension dimension);

struct DecileRate {
  long n = 0;
  long positives = 0;
  std::optional<double> rate;
  std::optional<double> ci_low;   // 95% Wald
  std::optional<double> ci_high;
};

/// Outcome rate per decile 1..10 (index decile-1) with 95% Wald bands.
using DecileRates = std::array<DecileRate, 10>;

DecileRates rate_by_decile(const Cohort& cohort, LabelField label);

/// Per-decile rates split by a secondary dimension (Race or Sex).
std::map<GroupKey, DecileRates> rate_by_decile_grouped(const Cohort& cohort,
                                                       LabelField label,
                                                       GroupDimension dimension);

struct ScoreCategoryCounts {
  long low = 0;
  long medium = 0;
  long high = 0;
  long na = 0;

  long binary_low() const { return low; }
  long binary_high() const { return medium + high; }
  long total() const { return low + medium + high + na; }
};

ScoreCategoryCounts score_category_counts(const Cohort& cohort);

struct SexCounts {
  long female = 0;
  long male = 0;
  long unknown = 0;
};

SexCounts sex_counts(const Cohort& cohort);

/// Decile histograms per outcome class plus the interpolated decile at
/// which the recidivist count first exceeds the non-recidivist count
/// (piecewise-linear between adjacent deciles; 1.0 when recidivists
/// already dominate decile 1; nullopt when they never do).
struct DecileDistribution {
  std::array<long, 10> positives{};
  std::array<long, 10> negatives{};
  std::array<double, 10> positive_density{};
  std::array<double, 10> negative_density{};
  std::optional<double> crossing;
};

DecileDistribution decile_distribution_by_outcome(const Cohort& cohort,
                                                  LabelField label);

}  // namespace recidaudit

#endif  // RECIDAUDIT_METRICS_HPP_
