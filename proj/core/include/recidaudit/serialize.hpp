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

#ifndef RECIDAUDIT_SERIALIZE_HPP_
#define RECIDAUDIT_SERIALIZE_HPP_

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "recidaudit/audit.hpp"
#include "recidaudit/cutoff.hpp"
#include "recidaudit/inference.hpp"
#include "recidaudit/ingest.hpp"
#include "recidaudit/metrics.hpp"
#include "recidaudit/roc.hpp"
#include "recidaudit/survival.hpp"
#include "recidaudit/table.hpp"

namespace recidaudit {

inline constexpr int kOutputSchemaVersion = 1;

nlohmann::json to_json(const AuditReport& report);
nlohmann::json to_json(const ValidationFinding& finding);
nlohmann::json findings_report_json(const ParseResult& result);

// --- audit ---
Table histogram_table(const std::vector<HistogramSeries>& series);
std::string histogram_svg(const std::vector<HistogramSeries>& series,
                          const std::string& title,
                          std::optional<Date> cutoff_marker);
Table prepost_table(const PrePostTable& t, const std::string& label_name);

// --- survival ---
Table km_table(const KMCurve& curve);
Table km_table_multi(
    const std::vector<std::pair<std::string, const KMCurve*>>& curves);
std::string km_svg(
    const std::vector<std::pair<std::string, const KMCurve*>>& curves,
    long window_marker_days);

// --- roc ---
Table roc_table(const RocCurve& curve);
Table roc_table_multi(
    const std::vector<std::pair<std::string, const RocCurve*>>& curves);
std::string roc_svg(
    const std::vector<std::pair<std::string, const RocCurve*>>& curves,
    int marked_threshold);

// --- cutoff explorer ---
Table fraction_observed_table(const std::vector<ObservedFractionBin>& bins);
std::string fraction_observed_svg(const std::vector<ObservedFractionBin>& bins,
                                  Date solid_marker, Date dashed_marker);
Table quarterly_rates_table(const std::vector<QuarterRates>& rates);

// --- metrics ---
Table confusion_matrix_table(const ConfusionMatrix& cm);
Table confusion_similar_table(
    const std::vector<std::pair<std::string, const ConfusionMatrix*>>& rows);
Table confusion_different_table(
    const std::vector<std::pair<std::string, const ConfusionMatrix*>>& rows);
Table rate_by_decile_table(
    const std::vector<std::pair<std::string, const DecileRates*>>& series);
std::string rate_by_decile_svg(
    const std::vector<std::pair<std::string, const DecileRates*>>& series,
    bool ci_band_for_last);
Table decile_distribution_table(const DecileDistribution& dist);
std::string decile_distribution_svg(
    const std::vector<std::pair<std::string, const DecileDistribution*>>& dists);

// --- inference ---
Table test_results_table(
    const std::vector<std::pair<std::string, const TestResult*>>& rows);

/// Writes content to path atomically (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace recidaudit

#endif  // RECIDAUDIT_SERIALIZE_HPP_
