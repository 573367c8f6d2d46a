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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "recidaudit/audit.hpp"
#include "recidaudit/cohort.hpp"
#include "recidaudit/cutoff.hpp"
#include "recidaudit/inference.hpp"
#include "recidaudit/ingest.hpp"
#include "recidaudit/metrics.hpp"
#include "recidaudit/roc.hpp"
#include "recidaudit/serialize.hpp"
#include "recidaudit/survival.hpp"

namespace recidaudit::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<PersonRecord> load_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return read_records_jsonl(in);
}

Cohort load_cohort(const std::string& path, LabelField label, Date data_end) {
  return Cohort::build(load_jsonl(path), FullTrimmedRule{}, data_end, label);
}

std::string jsonl_string(const std::vector<PersonRecord>& records) {
  std::ostringstream out;
  write_records_jsonl(records, out);
  return std::move(out).str();
}

void write_table(const fs::path& dir, const std::string& stem,
                 const Table& table) {
  write_file_atomic((dir / (stem + ".csv")).string(), table.to_csv());
  write_file_atomic((dir / (stem + ".json")).string(),
                    table.to_json().dump(2) + "\n");
}

Table confusion_stats_table(const ConfusionResult& result) {
  Table t("confusion-stats",
          {"n", "excluded-missing-score", "tn", "fp", "fn", "tp", "accuracy",
           "fpr", "fnr", "ppv", "npv", "prevalence", "detection-rate",
           "sensitivity", "specificity"});
  const ConfusionStats s = derive_stats(result.matrix);
  const ConfusionMatrix& m = result.matrix;
  t.add_row({m.n(), result.excluded_missing_score, m.tn, m.fp, m.fn, m.tp,
             cell(s.accuracy), cell(s.fpr), cell(s.fnr), cell(s.ppv),
             cell(s.npv), cell(s.prevalence), cell(s.detection_rate),
             cell(s.sensitivity), cell(s.specificity)});
  return t;
}

Table grouped_confusion_table(
    const std::map<GroupKey, GroupedConfusion>& groups,
    const std::string& dimension_name) {
  Table t("confusion-by-" + dimension_name,
          {dimension_name, "n", "tn", "fp", "fn", "tp", "accuracy", "fpr",
           "fnr", "ppv", "npv", "prevalence", "detection-rate"});
  for (const auto& [key, g] : groups) {
    t.add_row({to_string(key), g.matrix.n(), g.matrix.tn, g.matrix.fp,
               g.matrix.fn, g.matrix.tp, cell(g.stats.accuracy),
               cell(g.stats.fpr), cell(g.stats.fnr), cell(g.stats.ppv),
               cell(g.stats.npv), cell(g.stats.prevalence),
               cell(g.stats.detection_rate)});
  }
  return t;
}

Table rate_table(const RateResult& r, const std::string& label_name) {
  Table t("recidivism-rate", {label_name, "n", "rate"});
  t.add_row({std::string("0"), r.n0,
             r.rate ? TableCell(1.0 - *r.rate) : TableCell(std::monostate{})});
  t.add_row({std::string("1"), r.n1, cell(r.rate)});
  return t;
}

Table score_categories_table(const ScoreCategoryCounts& c) {
  Table t("score-categories", {"category", "count"});
  t.add_row({std::string("Low"), c.low});
  t.add_row({std::string("Medium"), c.medium});
  t.add_row({std::string("High"), c.high});
  if (c.na > 0) t.add_row({std::string("N/A"), c.na});
  t.add_row({std::string("total"), c.total()});
  return t;
}

Table binary_score_table(const ScoreCategoryCounts& c) {
  Table t("score-categories-binary", {"high-score", "count"});
  t.add_row({std::string("0"), c.binary_low()});
  t.add_row({std::string("1"), c.binary_high()});
  t.add_row({std::string("total"), c.binary_low() + c.binary_high()});
  return t;
}

Table sex_counts_table(const SexCounts& c) {
  Table t("sex-counts", {"sex", "count"});
  t.add_row({std::string("Female"), c.female});
  t.add_row({std::string("Male"), c.male});
  if (c.unknown > 0) t.add_row({std::string("unknown"), c.unknown});
  t.add_row({std::string("total"), c.female + c.male + c.unknown});
  return t;
}

std::string label_column_name(LabelField label) {
  return label == LabelField::IsRecid ? "is-recid" : "two-year-recid";
}

}  // namespace

int cmd_ingest(const IngestArgs& args) {
  if (args.full_path.empty() && args.two_year_path.empty()) {
    std::cerr << "ingest: provide --full and/or --two-year\n";
    return kExitBadInput;
  }
  const fs::path out_dir(args.out_dir);
  fs::create_directories(out_dir);

  json summary;
  summary["schema_version"] = kOutputSchemaVersion;

  if (!args.full_path.empty()) {
    const ParseResult result = parse_full_scores(read_file(args.full_path));
    write_file_atomic((out_dir / "full_scores.jsonl").string(),
                      jsonl_string(result.records));
    write_file_atomic((out_dir / "findings-full.json").string(),
                      findings_report_json(result).dump(2) + "\n");
    summary["full"] = {{"records", result.records.size()},
                       {"rejected_rows", result.rejected_rows},
                       {"findings", result.findings.size()}};
  }
  if (!args.two_year_path.empty()) {
    const ParseResult result = parse_two_year(read_file(args.two_year_path));
    write_file_atomic((out_dir / "two_year.jsonl").string(),
                      jsonl_string(result.records));
    write_file_atomic((out_dir / "findings-two-year.json").string(),
                      findings_report_json(result).dump(2) + "\n");
    summary["two_year"] = {{"records", result.records.size()},
                           {"rejected_rows", result.rejected_rows},
                           {"findings", result.findings.size()}};
  }
  std::cout << summary.dump(2) << "\n";
  return kExitOk;
}

int cmd_audit(const AuditArgs& args) {
  const Cohort cohort = load_cohort(args.two_year_path, args.label, args.data_end);
  const AuditReport report = censoring_asymmetry(cohort, args.cutoff, args.label);
  std::cout << to_json(report).dump(2) << "\n";
  return report.verdict == AuditVerdict::Symmetric ? kExitOk : kExitAsymmetric;
}

int cmd_correct(const CorrectArgs& args) {
  const Cohort cohort =
      load_cohort(args.two_year_path, LabelField::TwoYearRecid, args.data_end);
  const Cohort corrected = correct_two_year(cohort, args.cutoff);
  write_file_atomic(args.out_path, jsonl_string(corrected.records()));
  std::cerr << "kept " << corrected.size() << " of " << cohort.size()
            << " records\n";
  return kExitOk;
}

int cmd_metrics(const MetricsArgs& args) {
  const Cohort cohort = load_cohort(args.cohort_path, args.label, args.data_end);
  const fs::path out_dir(args.out_dir);
  fs::create_directories(out_dir);

  write_table(out_dir, "recidivism-rate",
              rate_table(recidivism_rate(cohort, args.label),
                         label_column_name(args.label)));
  const ScoreCategoryCounts categories = score_category_counts(cohort);
  write_table(out_dir, "score-categories", score_categories_table(categories));
  write_table(out_dir, "score-categories-binary", binary_score_table(categories));
  write_table(out_dir, "confusion-matrix",
              confusion_matrix_table(confusion(cohort, args.label).matrix));
  write_table(out_dir, "confusion-stats",
              confusion_stats_table(confusion(cohort, args.label)));
  write_table(out_dir, "sex-counts", sex_counts_table(sex_counts(cohort)));

  const DecileDistribution dist =
      decile_distribution_by_outcome(cohort, args.label);
  write_table(out_dir, "decile-distribution", decile_distribution_table(dist));

  if (args.by == "race" || args.by == "sex") {
    const GroupDimension dim =
        args.by == "race" ? GroupDimension::Race : GroupDimension::Sex;
    write_table(out_dir, "confusion-by-" + *args.by,
                grouped_confusion_table(
                    grouped_confusion(cohort, args.label, dim), *args.by));
    const auto grouped = rate_by_decile_grouped(cohort, args.label, dim);
    std::vector<std::pair<std::string, const DecileRates*>> series;
    for (const auto& [key, rates] : grouped) {
      series.emplace_back(to_string(key), &rates);
    }
    write_table(out_dir, "rate-by-decile-by-" + *args.by,
                rate_by_decile_table(series));
  } else if (args.by == "decile") {
    const DecileRates rates = rate_by_decile(cohort, args.label);
    write_table(out_dir, "rate-by-decile",
                rate_by_decile_table({{"cohort", &rates}}));
  } else if (args.by) {
    std::cerr << "metrics: unknown --by dimension '" << *args.by << "'\n";
    return kExitBadInput;
  }
  return kExitOk;
}

int cmd_tests(const TestsArgs& args) {
  const Cohort a = load_cohort(args.cohort_a_path, args.label, args.data_end);
  const Cohort b = load_cohort(args.cohort_b_path, args.label, args.data_end);
  const RateResult rate_a = recidivism_rate(a, args.label);
  const RateResult rate_b = recidivism_rate(b, args.label);
  if (!rate_a.rate || !rate_b.rate) {
    std::cerr << "tests: a cohort has no labeled records\n";
    return kExitBadInput;
  }
  const TestResult a_vs_b =
      one_sample_proportion_tests(rate_a.n0 + rate_a.n1, rate_a.n1, *rate_b.rate);
  const TestResult b_vs_a =
      one_sample_proportion_tests(rate_b.n0 + rate_b.n1, rate_b.n1, *rate_a.rate);
  const Table t = test_results_table(
      {{"a_vs_b", &a_vs_b}, {"b_vs_a", &b_vs_a}});
  std::cout << t.to_csv();
  if (args.out_path) write_file_atomic(*args.out_path, t.to_csv());
  return kExitOk;
}

int cmd_survival(const SurvivalArgs& args) {
  // The full input is the normalized full-scores file; the upstream trims
  // are applied here so the curve covers the trimmed full cohort.
  auto [full_cohort, trim_report] =
      apply_propublica_trims(load_jsonl(args.full_path), args.data_end);
  const Cohort faulty =
      load_cohort(args.faulty_path, LabelField::IsRecid, args.data_end);
  const Cohort corrected =
      load_cohort(args.corrected_path, LabelField::IsRecid, args.data_end);

  auto fit = [&](const Cohort& c) {
    std::vector<SurvivalInput> inputs;
    inputs.reserve(c.size());
    for (const auto& r : c.records()) {
      inputs.push_back(to_survival_input(r, args.data_end).input);
    }
    return km_fit(std::move(inputs));
  };
  const KMCurve full_curve = fit(full_cohort);
  const KMCurve faulty_curve = fit(faulty);
  const KMCurve corrected_curve = fit(corrected);

  const std::vector<std::pair<std::string, const KMCurve*>> curves = {
      {"full", &full_curve},
      {"faulty", &faulty_curve},
      {"corrected", &corrected_curve}};

  const fs::path out_dir(args.out_dir);
  fs::create_directories(out_dir);
  write_file_atomic((out_dir / "survival-curves.csv").string(),
                    km_table_multi(curves).to_csv());
  write_file_atomic((out_dir / "survival-curves.svg").string(),
                    km_svg(curves, args.window_days));

  Table marks("recidivated-share-at-window", {"dataset", "share"});
  for (const auto& [name, curve] : curves) {
    marks.add_row({name, recidivated_share_at(*curve, args.window_days)});
  }
  write_table(out_dir, "recidivated-share-at-window", marks);
  std::cout << marks.to_csv();
  return kExitOk;
}

int cmd_roc(const RocArgs& args) {
  const Cohort faulty = load_cohort(args.faulty_path, args.label, args.data_end);
  const Cohort corrected =
      load_cohort(args.corrected_path, args.label, args.data_end);
  const RocCurve faulty_curve = roc_points(faulty, args.label);
  const RocCurve corrected_curve = roc_points(corrected, args.label);
  const std::vector<std::pair<std::string, const RocCurve*>> curves = {
      {"faulty", &faulty_curve}, {"corrected", &corrected_curve}};

  const fs::path out_dir(args.out_dir);
  fs::create_directories(out_dir);
  write_file_atomic((out_dir / "roc-curves.csv").string(),
                    roc_table_multi(curves).to_csv());
  write_file_atomic((out_dir / "roc-curves.svg").string(),
                    roc_svg(curves, kBinaryScoreThreshold));

  Table aucs("roc-auc", {"dataset", "auc"});
  aucs.rate_digits = 6;
  aucs.add_row({std::string("faulty"), auc(faulty_curve)});
  aucs.add_row({std::string("corrected"), auc(corrected_curve)});
  write_table(out_dir, "roc-auc", aucs);
  std::cout << aucs.to_csv();
  return kExitOk;
}

int cmd_cutoff_explore(const CutoffExploreArgs& args) {
  auto [full_cohort, trim_report] =
      apply_propublica_trims(load_jsonl(args.full_path), args.data_end);
  const Cohort two_year =
      load_cohort(args.two_year_path, LabelField::TwoYearRecid, args.data_end);

  const fs::path out_dir(args.out_dir);
  fs::create_directories(out_dir);

  const auto bins = fraction_observed(full_cohort, 7, args.window_days);
  write_file_atomic((out_dir / "fraction-observed.csv").string(),
                    fraction_observed_table(bins).to_csv());
  write_file_atomic((out_dir / "fraction-observed.svg").string(),
                    fraction_observed_svg(bins, args.cutoff, args.alt_cutoff));

  write_table(out_dir, "quarterly-recidivism-rates",
              quarterly_rates_table(quarterly_rates(two_year)));

  Table alt("rate-with-cutoff", {"cutoff", "rate"});
  for (const Date cutoff : {args.cutoff, args.alt_cutoff}) {
    alt.add_row({format_date(cutoff), cell(rate_with_cutoff(two_year, cutoff))});
  }
  write_table(out_dir, "rate-with-cutoff", alt);
  return kExitOk;
}

}  // namespace recidaudit::cli
