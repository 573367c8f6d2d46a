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

#include "recidaudit/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace recidaudit {

namespace {

constexpr double kZ95 = 1.96;

void tally(ConfusionMatrix& cm, long& excluded, const PersonRecord& r,
           bool positive_outcome) {
  if (!r.has_usable_score()) {
    excluded += 1;
    return;
  }
  const bool predicted_high = binarize_score(r.decile_score) == BinaryScore::High;
  if (positive_outcome) {
    (predicted_high ? cm.tp : cm.fn) += 1;
  } else {
    (predicted_high ? cm.fp : cm.tn) += 1;
  }
}

std::optional<GroupKey> group_key_for(const PersonRecord& r,
                                      GroupDimension dim) {
  switch (dim) {
    case GroupDimension::All:
      return GroupKey{GroupDimension::All, std::monostate{}};
    case GroupDimension::Race:
      if (!r.race) return std::nullopt;
      return GroupKey{GroupDimension::Race, *r.race};
    case GroupDimension::Sex:
      if (!r.sex) return std::nullopt;
      return GroupKey{GroupDimension::Sex, *r.sex};
    case GroupDimension::Decile:
      if (!r.has_usable_score()) return std::nullopt;
      return GroupKey{GroupDimension::Decile, r.decile_score};
    case GroupDimension::YearQuarter:
      return GroupKey{GroupDimension::YearQuarter, year_quarter_of(r.screen_date)};
  }
  return std::nullopt;
}

void fill_decile_rate(DecileRate& out) {
  if (out.n == 0) return;
  const double rate = double(out.positives) / double(out.n);
  out.rate = rate;
  const double half = kZ95 * std::sqrt(rate * (1.0 - rate) / double(out.n));
  out.ci_low = rate - half;
  out.ci_high = rate + half;
}

}  // namespace

std::string to_string(const GroupKey& key) {
  switch (key.dimension) {
    case GroupDimension::All: return "all";
    case GroupDimension::Race: return to_string(std::get<Race>(key.value));
    case GroupDimension::Sex: return to_string(std::get<Sex>(key.value));
    case GroupDimension::Decile: return std::to_string(std::get<int>(key.value));
    case GroupDimension::YearQuarter:
      return to_string(std::get<YearQuarter>(key.value));
  }
  return "?";
}

RateResult recidivism_rate(const Cohort& cohort, LabelField label) {
  RateResult result;
  for (const auto& r : cohort.records()) {
    const auto outcome = r.outcome(label);
    if (!outcome) continue;
    (*outcome ? result.n1 : result.n0) += 1;
  }
  const long total = result.n0 + result.n1;
  if (total > 0) result.rate = double(result.n1) / double(total);
  return result;
}

ConfusionResult confusion(const Cohort& cohort, LabelField label) {
  ConfusionResult result;
  for (const auto& r : cohort.records()) {
    const auto outcome = r.outcome(label);
    if (!outcome) continue;
    tally(result.matrix, result.excluded_missing_score, r, *outcome);
  }
  return result;
}

std::map<GroupKey, GroupedConfusion> grouped_confusion(const Cohort& cohort,
                                                       LabelField label,
                                                       GroupDimension dimension) {
  if (dimension != GroupDimension::All && dimension != GroupDimension::Race &&
      dimension != GroupDimension::Sex) {
    throw std::invalid_argument(
        "grouped_confusion supports All, Race and Sex dimensions");
  }
  std::map<GroupKey, GroupedConfusion> groups;
  for (const auto& r : cohort.records()) {
    const auto outcome = r.outcome(label);
    if (!outcome) continue;
    const auto key = group_key_for(r, dimension);
    if (!key) continue;
    auto& g = groups[*key];
    tally(g.matrix, g.excluded_missing_score, r, *outcome);
  }
  for (auto& [key, g] : groups) g.stats = derive_stats(g.matrix);
  return groups;
}

DecileRates rate_by_decile(const Cohort& cohort, LabelField label) {
  DecileRates rates{};
  for (const auto& r : cohort.records()) {
    const auto outcome = r.outcome(label);
    if (!outcome || !r.has_usable_score()) continue;
    auto& cell = rates[size_t(r.decile_score - 1)];
    cell.n += 1;
    if (*outcome) cell.positives += 1;
  }
  for (auto& cell : rates) fill_decile_rate(cell);
  return rates;
}

std::map<GroupKey, DecileRates> rate_by_decile_grouped(const Cohort& cohort,
                                                       LabelField label,
                                                       GroupDimension dimension) {
  if (dimension != GroupDimension::Race && dimension != GroupDimension::Sex) {
    throw std::invalid_argument(
        "rate_by_decile_grouped supports Race and Sex dimensions");
  }
  std::map<GroupKey, DecileRates> groups;
  for (const auto& r : cohort.records()) {
    const auto outcome = r.outcome(label);
    if (!outcome || !r.has_usable_score()) continue;
    const auto key = group_key_for(r, dimension);
    if (!key) continue;
    auto& cell = groups[*key][size_t(r.decile_score - 1)];
    cell.n += 1;
    if (*outcome) cell.positives += 1;
  }
  for (auto& [key, rates] : groups) {
    for (auto& cell : rates) fill_decile_rate(cell);
  }
  return groups;
}

ScoreCategoryCounts score_category_counts(const Cohort& cohort) {
  ScoreCategoryCounts counts;
  for (const auto& r : cohort.records()) {
    switch (r.score_text) {
      case ScoreText::Low: counts.low += 1; break;
      case ScoreText::Medium: counts.medium += 1; break;
      case ScoreText::High: counts.high += 1; break;
      case ScoreText::NA: counts.na += 1; break;
    }
  }
  return counts;
}

SexCounts sex_counts(const Cohort& cohort) {
  SexCounts counts;
  for (const auto& r : cohort.records()) {
    if (!r.sex) {
      counts.unknown += 1;
    } else if (*r.sex == Sex::Female) {
      counts.female += 1;
    } else {
      counts.male += 1;
    }
  }
  return counts;
}

DecileDistribution decile_distribution_by_outcome(const Cohort& cohort,
                                                  LabelField label) {
  DecileDistribution dist;
  for (const auto& r : cohort.records()) {
    const auto outcome = r.outcome(label);
    if (!outcome || !r.has_usable_score()) continue;
    auto& counts = *outcome ? dist.positives : dist.negatives;
    counts[size_t(r.decile_score - 1)] += 1;
  }

  long pos_total = 0, neg_total = 0;
  for (size_t d = 0; d < 10; ++d) {
    pos_total += dist.positives[d];
    neg_total += dist.negatives[d];
  }
  for (size_t d = 0; d < 10; ++d) {
    if (pos_total > 0)
      dist.positive_density[d] = double(dist.positives[d]) / double(pos_total);
    if (neg_total > 0)
      dist.negative_density[d] = double(dist.negatives[d]) / double(neg_total);
  }

  // Crossing of the count curves: first decile where positives exceed
  // negatives, located by linear interpolation of the difference.
  auto diff = [&](size_t d) {
    return double(dist.positives[d] - dist.negatives[d]);
  };
  if (diff(0) > 0) {
    dist.crossing = 1.0;
    return dist;
  }
  for (size_t d = 1; d < 10; ++d) {
    if (diff(d) > 0) {
      const double prev = diff(d - 1);  // <= 0
      dist.crossing = double(d) + (0.0 - prev) / (diff(d) - prev);
      return dist;
    }
  }
  return dist;
}

}  // namespace recidaudit
