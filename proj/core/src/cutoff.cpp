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

#include "recidaudit/cutoff.hpp"

#include <algorithm>
#include <stdexcept>

#include "recidaudit/cohort.hpp"
#include "recidaudit/metrics.hpp"

namespace recidaudit {

std::vector<ObservedFractionBin> fraction_observed(const Cohort& full_trimmed,
                                                   int bin_width_days,
                                                   int window_days,
                                                   int smooth_window_bins) {
  if (bin_width_days < 1) throw std::domain_error("bin width must be >= 1");
  if (smooth_window_bins < 1 || smooth_window_bins % 2 == 0) {
    throw std::domain_error("smoothing window must be odd and >= 1");
  }

  std::vector<ObservedFractionBin> bins;
  const auto anchor = full_trimmed.min_screen_date();
  if (!anchor) return bins;

  long max_bin = 0;
  for (const auto& r : full_trimmed.records()) {
    max_bin = std::max(max_bin,
                       days_between(*anchor, r.screen_date) / bin_width_days);
  }
  bins.resize(size_t(max_bin) + 1);
  std::vector<long> observed(bins.size(), 0);
  for (size_t b = 0; b < bins.size(); ++b) {
    bins[b].bin_start = add_days(*anchor, long(b) * bin_width_days);
  }

  for (const auto& r : full_trimmed.records()) {
    if (r.is_recid != RecidFlag::No) continue;  // non-recidivists only
    const size_t b =
        size_t(days_between(*anchor, r.screen_date) / bin_width_days);
    bins[b].n += 1;
    if (free_days(r, full_trimmed.data_end()) >= window_days) observed[b] += 1;
  }

  for (size_t b = 0; b < bins.size(); ++b) {
    if (bins[b].n > 0) {
      bins[b].fraction = double(observed[b]) / double(bins[b].n);
    }
  }

  const long half = smooth_window_bins / 2;
  for (size_t b = 0; b < bins.size(); ++b) {
    double sum = 0;
    long count = 0;
    const long lo = std::max(long(b) - half, 0L);
    const long hi = std::min(long(b) + half, long(bins.size()) - 1);
    for (long j = lo; j <= hi; ++j) {
      if (bins[size_t(j)].fraction) {
        sum += *bins[size_t(j)].fraction;
        count += 1;
      }
    }
    if (count > 0) bins[b].smoothed = sum / double(count);
  }
  return bins;
}

std::vector<QuarterRates> quarterly_rates(const Cohort& two_year,
                                          LabelField label) {
  std::vector<QuarterRates> out;
  for (int year : {2013, 2014}) {
    for (int q = 1; q <= 4; ++q) {
      out.push_back(QuarterRates{YearQuarter{year, q}});
    }
  }
  auto slot = [&](YearQuarter q) -> QuarterRates* {
    for (auto& s : out) {
      if (s.quarter == q) return &s;
    }
    return nullptr;
  };

  std::vector<long> positives(out.size(), 0);
  for (const auto& r : two_year.records()) {
    const auto outcome = r.outcome(label);
    if (!outcome) continue;
    QuarterRates* s = slot(year_quarter_of(r.screen_date));
    if (!s) continue;  // outside the tabulated range
    s->n += 1;
    if (*outcome) positives[size_t(s - out.data())] += 1;
  }
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i].n > 0) {
      out[i].rate1 = double(positives[i]) / double(out[i].n);
      out[i].rate0 = 1.0 - *out[i].rate1;
    }
  }
  return out;
}

std::optional<double> rate_with_cutoff(const Cohort& two_year, Date cutoff,
                                       LabelField label) {
  return recidivism_rate(correct_two_year(two_year, cutoff), label).rate;
}

}  // namespace recidaudit
