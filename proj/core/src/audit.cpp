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

#include "recidaudit/audit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace recidaudit {

PrePostTable prepost_contingency(const Cohort& cohort, Date cutoff,
                                 LabelField label) {
  PrePostTable t;
  for (const auto& r : cohort.records()) {
    const auto outcome = r.outcome(label);
    if (!outcome) continue;  // bad-data / unlabeled rows excluded
    const bool post = r.screen_date > cutoff;
    if (*outcome) {
      (post ? t.post_positives : t.pre_positives) += 1;
    } else {
      (post ? t.post_negatives : t.pre_negatives) += 1;
    }
  }
  return t;
}

std::string to_string(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::Symmetric: return "symmetric";
    case AuditVerdict::AsymmetricPositives: return "asymmetric_positives";
    case AuditVerdict::AsymmetricNegatives: return "asymmetric_negatives";
  }
  return "?";
}

AuditReport censoring_asymmetry(const Cohort& cohort, Date cutoff,
                                LabelField label) {
  const PrePostTable t = prepost_contingency(cohort, cutoff, label);
  AuditReport report;
  report.cutoff = cutoff;
  report.post_cutoff_positives = t.post_positives;
  report.post_cutoff_negatives = t.post_negatives;
  report.pre_cutoff_positives = t.pre_positives;
  report.pre_cutoff_negatives = t.pre_negatives;

  if (t.post_positives == 0) {
    report.excess_share = 0.0;
    report.excess_ratio = 0.0;
  } else {
    report.excess_share = double(t.post_positives) / double(t.positives());
    if (t.pre_positives > 0) {
      report.excess_ratio = double(t.post_positives) / double(t.pre_positives);
    }
  }

  if (t.post_positives > 0 && t.post_negatives == 0) {
    report.verdict = AuditVerdict::AsymmetricPositives;
  } else if (t.post_negatives > 0 && t.post_positives == 0) {
    report.verdict = AuditVerdict::AsymmetricNegatives;
  } else {
    report.verdict = AuditVerdict::Symmetric;
  }
  return report;
}

std::vector<HistogramSeries> histogram_by_screen_date(
    const Cohort& cohort, int width_days,
    std::optional<LabelField> split_by_label) {
  if (width_days < 1) throw std::domain_error("histogram width_days must be >= 1");

  std::vector<HistogramSeries> series;
  if (cohort.empty()) return series;

  const Date anchor = *cohort.min_screen_date();
  long max_bin = 0;
  for (const auto& r : cohort.records()) {
    max_bin = std::max(max_bin, days_between(anchor, r.screen_date) / width_days);
  }

  // label key -> series index; nullopt collects undefined labels in split mode
  std::map<std::optional<bool>, size_t> index;
  auto series_for = [&](std::optional<bool> key) -> HistogramSeries& {
    const auto it = index.find(key);
    if (it != index.end()) return series[it->second];
    index.emplace(key, series.size());
    HistogramSeries s;
    s.label = key;
    s.bins.resize(size_t(max_bin) + 1);
    for (size_t b = 0; b < s.bins.size(); ++b) {
      s.bins[b] = DateBin{add_days(anchor, long(b) * width_days), width_days, 0};
    }
    series.push_back(std::move(s));
    return series.back();
  };

  for (const auto& r : cohort.records()) {
    const std::optional<bool> key =
        split_by_label ? r.outcome(*split_by_label) : std::nullopt;
    auto& s = series_for(key);
    s.bins[size_t(days_between(anchor, r.screen_date) / width_days)].count += 1;
  }

  // deterministic order: negatives, positives, then unlabeled
  std::vector<HistogramSeries> ordered;
  for (const auto key : {std::optional<bool>{false}, std::optional<bool>{true},
                         std::optional<bool>{}}) {
    const auto it = index.find(key);
    if (it != index.end()) ordered.push_back(std::move(series[it->second]));
  }
  return ordered;
}

}  // namespace recidaudit
