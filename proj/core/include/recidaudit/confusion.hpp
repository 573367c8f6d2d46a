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

#ifndef RECIDAUDIT_CONFUSION_HPP_
#define RECIDAUDIT_CONFUSION_HPP_

#include <optional>

namespace recidaudit {

/// 2x2 outcome-vs-prediction counts. Positive class = predicted High /
/// observed recidivist.
struct ConfusionMatrix {
  long tn = 0;
  long fp = 0;
  long fn = 0;
  long tp = 0;

  long n() const { return tn + fp + fn + tp; }
  long actual_positives() const { return tp + fn; }
  long actual_negatives() const { return tn + fp; }
  long predicted_positives() const { return tp + fp; }
  long predicted_negatives() const { return tn + fn; }

  bool operator==(const ConfusionMatrix&) const = default;
};

/// Derived rates. A rate whose denominator is zero is nullopt, so report
/// rendering can print an explicit marker instead of 0 or NaN.
struct ConfusionStats {
  std::optional<double> accuracy;
  std::optional<double> fpr;
  std::optional<double> fnr;
  std::optional<double> ppv;
  std::optional<double> npv;
  std::optional<double> prevalence;
  std::optional<double> detection_rate;
  std::optional<double> sensitivity;   // 1 - fnr
  std::optional<double> specificity;   // 1 - fpr
};

ConfusionStats derive_stats(const ConfusionMatrix& cm);

enum class BinaryScore { Low, High };

/// Decile split used throughout: 1-4 -> Low, 5-10 -> High. Throws
/// std::domain_error outside [1,10], naming the offending value.
BinaryScore binarize_score(int decile);

/// The split boundary above: predicted High iff decile >= 5.
inline constexpr int kBinaryScoreThreshold = 5;

}  // namespace recidaudit

#endif  // RECIDAUDIT_CONFUSION_HPP_
