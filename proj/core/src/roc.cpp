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

#include "recidaudit/roc.hpp"

#include <array>

namespace recidaudit {

RocCurve roc_points(const Cohort& cohort, LabelField label) {
  // decile histograms per outcome class
  std::array<long, 11> positives{};  // index = decile, 1..10 used
  std::array<long, 11> negatives{};
  for (const auto& r : cohort.records()) {
    const auto outcome = r.outcome(label);
    if (!outcome || !r.has_usable_score()) continue;
    (*outcome ? positives : negatives)[size_t(r.decile_score)] += 1;
  }
  long total_pos = 0, total_neg = 0;
  for (int d = 1; d <= 10; ++d) {
    total_pos += positives[size_t(d)];
    total_neg += negatives[size_t(d)];
  }

  RocCurve curve;
  curve.points.reserve(11);
  long pos_at_or_above = 0, neg_at_or_above = 0;
  // threshold k = 11 predicts nobody High; each decrement adds decile k
  for (int k = 11; k >= 1; --k) {
    if (k <= 10) {
      pos_at_or_above += positives[size_t(k)];
      neg_at_or_above += negatives[size_t(k)];
    }
    RocPoint p;
    p.threshold = k;
    p.matrix.tp = pos_at_or_above;
    p.matrix.fn = total_pos - pos_at_or_above;
    p.matrix.fp = neg_at_or_above;
    p.matrix.tn = total_neg - neg_at_or_above;
    p.fpr = total_neg > 0 ? double(neg_at_or_above) / double(total_neg) : 0.0;
    p.tpr = total_pos > 0 ? double(pos_at_or_above) / double(total_pos) : 0.0;
    curve.points.push_back(p);
  }
  return curve;
}

double auc(const RocCurve& curve) {
  double area = 0;
  for (size_t i = 1; i < curve.points.size(); ++i) {
    const auto& a = curve.points[i - 1];
    const auto& b = curve.points[i];
    area += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
  }
  return area;
}

}  // namespace recidaudit
