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

#include "recidaudit/confusion.hpp"

#include <stdexcept>
#include <string>

namespace recidaudit {

namespace {

std::optional<double> ratio(long num, long den) {
  if (den == 0) return std::nullopt;
  return double(num) / double(den);
}

}  // namespace

ConfusionStats derive_stats(const ConfusionMatrix& cm) {
  ConfusionStats s;
  s.accuracy = ratio(cm.tp + cm.tn, cm.n());
  s.fpr = ratio(cm.fp, cm.actual_negatives());
  s.fnr = ratio(cm.fn, cm.actual_positives());
  s.ppv = ratio(cm.tp, cm.predicted_positives());
  s.npv = ratio(cm.tn, cm.predicted_negatives());
  s.prevalence = ratio(cm.actual_positives(), cm.n());
  s.detection_rate = ratio(cm.tp, cm.n());
  if (s.fnr) s.sensitivity = 1.0 - *s.fnr;
  if (s.fpr) s.specificity = 1.0 - *s.fpr;
  return s;
}

BinaryScore binarize_score(int decile) {
  if (decile < 1 || decile > 10) {
    throw std::domain_error("decile score out of range [1,10]: " +
                            std::to_string(decile));
  }
  return decile < kBinaryScoreThreshold ? BinaryScore::Low : BinaryScore::High;
}

}  // namespace recidaudit
