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

#ifndef RECIDAUDIT_ROC_HPP_
#define RECIDAUDIT_ROC_HPP_

#include <vector>

#include "recidaudit/confusion.hpp"
#include "recidaudit/records.hpp"

namespace recidaudit {

/// One operating point: predict High when decile >= threshold. threshold
/// 11 is the all-Low classifier (0,0); threshold 1 the all-High (1,1).
struct RocPoint {
  int threshold = 0;
  double fpr = 0;
  double tpr = 0;
  ConfusionMatrix matrix;
};

/// Points ordered by loosening threshold (11 down to 1), so fpr and tpr
/// are non-decreasing along the curve.
struct RocCurve {
  std::vector<RocPoint> points;
};

/// All 11 decile thresholds. Records without a usable score are excluded,
/// matching the confusion-matrix convention.
RocCurve roc_points(const Cohort& cohort, LabelField label);

/// Trapezoidal area under the curve over fpr.
double auc(const RocCurve& curve);

}  // namespace recidaudit

#endif  // RECIDAUDIT_ROC_HPP_
