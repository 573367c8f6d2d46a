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

#include "recidaudit/survival.hpp"

#include <algorithm>
#include <stdexcept>

#include "recidaudit/cohort.hpp"

namespace recidaudit {

SurvivalConversion to_survival_input(const PersonRecord& r, Date data_end) {
  SurvivalConversion conv;
  long time = 0;
  if (r.is_recid == RecidFlag::Yes && r.recid_offense_date) {
    conv.input.event = true;
    time = days_between(r.screen_date, *r.recid_offense_date);
  } else {
    conv.input.event = false;
    time = free_days(r, data_end);
  }
  if (time <= 0) {
    conv.clamped = true;
    time = 1;
  }
  conv.input.time_days = time;
  return conv;
}

KMCurve km_fit(std::vector<SurvivalInput> inputs) {
  if (inputs.empty()) throw std::domain_error("km_fit: empty input");
  std::sort(inputs.begin(), inputs.end(),
            [](const SurvivalInput& a, const SurvivalInput& b) {
              return a.time_days < b.time_days;
            });

  KMCurve curve;
  long at_risk = long(inputs.size());
  double survival = 1.0;
  size_t i = 0;
  while (i < inputs.size()) {
    const long t = inputs[i].time_days;
    long events = 0;
    long censored = 0;
    for (; i < inputs.size() && inputs[i].time_days == t; ++i) {
      (inputs[i].event ? events : censored) += 1;
    }
    // events-first: everyone reaching t, censored there or not, is at risk
    if (events > 0) {
      survival *= 1.0 - double(events) / double(at_risk);
    }
    curve.steps.push_back(KMStep{t, at_risk, events, censored, survival});
    at_risk -= events + censored;
  }
  return curve;
}

double KMCurve::survival_at(long t) const {
  double s = 1.0;
  for (const auto& step : steps) {
    if (step.t > t) break;
    s = step.survival;
  }
  return s;
}

double recidivated_share_at(const KMCurve& curve, long t) {
  return 1.0 - curve.survival_at(t);
}

}  // namespace recidaudit
