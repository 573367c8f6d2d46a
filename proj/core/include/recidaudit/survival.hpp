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

#ifndef RECIDAUDIT_SURVIVAL_HPP_
#define RECIDAUDIT_SURVIVAL_HPP_

#include <vector>

#include "recidaudit/records.hpp"

namespace recidaudit {

struct SurvivalInput {
  long time_days = 1;   // > 0 after clamping
  bool event = false;   // true = recidivism observed at time_days
};

struct SurvivalConversion {
  SurvivalInput input;
  bool clamped = false;  // non-positive computed time clamped to 1 day
};

/// Recidivists contribute their calendar days to offense as an event;
/// everyone else is censored at their observed free time.
SurvivalConversion to_survival_input(const PersonRecord& r, Date data_end);

struct KMStep {
  long t = 0;
  long at_risk = 0;
  long events = 0;
  long censored = 0;
  double survival = 1.0;
};

/// Product-limit estimate. Steps are emitted at every distinct time;
/// survival changes only where events occur. Ties between events and
/// censorings at the same time are handled events-first.
struct KMCurve {
  std::vector<KMStep> steps;

  /// Survival at the last step time <= t (1.0 before the first step).
  double survival_at(long t) const;
};

/// Throws std::domain_error on empty input.
KMCurve km_fit(std::vector<SurvivalInput> inputs);

/// 1 - survival at the last step time <= t.
double recidivated_share_at(const KMCurve& curve, long t = 730);

}  // namespace recidaudit

#endif  // RECIDAUDIT_SURVIVAL_HPP_
