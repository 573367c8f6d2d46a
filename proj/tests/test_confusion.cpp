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

#include <cmath>

#include <doctest.h>

#include "recidaudit/confusion.hpp"
#include "support/oracles.hpp"

using namespace recidaudit;

namespace {

double rounded(double v, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(v * scale) / scale;
}

}  // namespace

TEST_CASE("derive_stats on the reference two-year matrix") {
  const ConfusionStats s = derive_stats({.tn = 2681, .fp = 1282, .fn = 1216, .tp = 2035});
  CHECK(rounded(*s.accuracy, 3) == doctest::Approx(0.654));
  CHECK(rounded(*s.fpr, 3) == doctest::Approx(0.323));
  CHECK(rounded(*s.fnr, 3) == doctest::Approx(0.374));
  CHECK(rounded(*s.ppv, 2) == doctest::Approx(0.61));
  CHECK(rounded(*s.npv, 2) == doctest::Approx(0.69));
  CHECK(rounded(*s.prevalence, 3) == doctest::Approx(0.451));
  CHECK(rounded(*s.detection_rate, 2) == doctest::Approx(0.28));
}

TEST_CASE("derive_stats on the corrected matrix") {
  const ConfusionStats s = derive_stats({.tn = 2681, .fp = 1282, .fn = 841, .tp = 1412});
  CHECK(rounded(*s.accuracy, 3) == doctest::Approx(0.658));
  CHECK(rounded(*s.fpr, 3) == doctest::Approx(0.323));
  CHECK(rounded(*s.fnr, 3) == doctest::Approx(0.373));
  CHECK(rounded(*s.ppv, 2) == doctest::Approx(0.52));
  CHECK(rounded(*s.npv, 2) == doctest::Approx(0.76));
  CHECK(rounded(*s.prevalence, 3) == doctest::Approx(0.362));
  CHECK(rounded(*s.detection_rate, 2) == doctest::Approx(0.23));
}

TEST_CASE("degenerate all-positive matrix keeps undefined markers") {
  const ConfusionStats s = derive_stats({.tn = 0, .fp = 0, .fn = 0, .tp = 5});
  CHECK(*s.accuracy == 1.0);
  CHECK(*s.fnr == 0.0);
  CHECK(!s.fpr);
  CHECK(!s.npv);
  CHECK(!s.specificity);
  CHECK(*s.sensitivity == 1.0);
  CHECK(*s.prevalence == 1.0);
  CHECK(*s.detection_rate == 1.0);
}

TEST_CASE("all-zero matrix is fully undefined") {
  const ConfusionStats s = derive_stats({});
  CHECK(!s.accuracy);
  CHECK(!s.fpr);
  CHECK(!s.fnr);
  CHECK(!s.ppv);
  CHECK(!s.npv);
  CHECK(!s.prevalence);
  CHECK(!s.detection_rate);
}

// The nine ratios recomputed from first principles on random matrices;
// identities must hold exactly, not approximately.
TEST_CASE("derive_stats identities on random matrices") {
  oracles::Rand rng(42);
  for (int i = 0; i < 10000; ++i) {
    const ConfusionMatrix cm{.tn = rng.below(2000), .fp = rng.below(2000),
                             .fn = rng.below(2000), .tp = rng.below(2000)};
    const ConfusionStats s = derive_stats(cm);
    const double n = double(cm.n());
    if (cm.n() > 0) {
      CHECK(*s.accuracy == double(cm.tp + cm.tn) / n);
      CHECK(*s.prevalence == double(cm.tp + cm.fn) / n);
      CHECK(*s.detection_rate == double(cm.tp) / n);
      CHECK(*s.detection_rate <= *s.prevalence);
    }
    if (cm.fp + cm.tn > 0) {
      CHECK(*s.fpr == double(cm.fp) / double(cm.fp + cm.tn));
      CHECK(*s.specificity + *s.fpr == 1.0);
    }
    if (cm.fn + cm.tp > 0) {
      CHECK(*s.fnr == double(cm.fn) / double(cm.fn + cm.tp));
      CHECK(*s.sensitivity + *s.fnr == 1.0);
    }
    if (cm.tp + cm.fp > 0) CHECK(*s.ppv == double(cm.tp) / double(cm.tp + cm.fp));
    if (cm.tn + cm.fn > 0) CHECK(*s.npv == double(cm.tn) / double(cm.tn + cm.fn));
  }
}

TEST_CASE("binarize_score splits at five") {
  CHECK(binarize_score(4) == BinaryScore::Low);
  CHECK(binarize_score(5) == BinaryScore::High);
  CHECK_THROWS_AS(binarize_score(0), std::domain_error);
  CHECK_THROWS_AS(binarize_score(11), std::domain_error);
  try {
    binarize_score(0);
    FAIL("expected domain_error");
  } catch (const std::domain_error& e) {
    // the offending value is named
    CHECK(std::string(e.what()).find("0") != std::string::npos);
  }
}

TEST_CASE("binarize_score is total and monotone on its domain") {
  bool seen_high = false;
  for (int d = 1; d <= 10; ++d) {
    const BinaryScore b = binarize_score(d);
    if (b == BinaryScore::High) seen_high = true;
    // once High, never back to Low
    if (seen_high) CHECK(b == BinaryScore::High);
  }
  CHECK(seen_high);
}
