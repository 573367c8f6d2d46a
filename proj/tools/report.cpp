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
//
// The report subcommand: runs the whole pipeline on the two source CSVs,
// writes every table and figure of the reference analysis, and validates
// the results against the published values embedded below.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"
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

class Manifest {
 public:
  explicit Manifest(fs::path out_dir) : out_dir_(std::move(out_dir)) {}

  void add_output(const fs::path& file, const std::string& kind,
                  const std::string& reproduces) {
    outputs_.push_back({{"file", fs::relative(file, out_dir_).string()},
                        {"kind", kind},
                        {"reproduces", reproduces}});
  }

  void check_count(const std::string& id, const std::string& description,
                   long expected, long actual) {
    record(id, description, json(expected), json(actual), expected == actual,
           "exact");
  }

  void check_near(const std::string& id, const std::string& description,
                  double expected, std::optional<double> actual, double tol) {
    const bool pass = actual && std::fabs(*actual - expected) <= tol;
    record(id, description, json(expected),
           actual ? json(*actual) : json(nullptr), pass,
           "abs<=" + format_tol(tol));
  }

  void check_bits_equal(const std::string& id, const std::string& description,
                        std::optional<double> a, std::optional<double> b) {
    const bool pass = a && b && *a == *b;
    record(id, description, a ? json(*a) : json(nullptr),
           b ? json(*b) : json(nullptr), pass, "bit-equal");
  }

  void check_order_of_magnitude(const std::string& id,
                                const std::string& description,
                                double expected_p,
                                std::optional<double> actual_p) {
    const bool pass = actual_p && *actual_p > 0 &&
                      std::fabs(std::log10(*actual_p) - std::log10(expected_p)) <= 1.0;
    record(id, description, json(expected_p),
           actual_p ? json(*actual_p) : json(nullptr), pass,
           "within one order of magnitude");
  }

  void check_true(const std::string& id, const std::string& description,
                  bool pass) {
    record(id, description, json(true), json(pass), pass, "boolean");
  }

  int failures() const { return failures_; }
  int passes() const { return passes_; }

  json to_json(const json& inputs) const {
    json j;
    j["schema_version"] = kOutputSchemaVersion;
    j["generated_at"] = now_iso8601();
    j["inputs"] = inputs;
    j["outputs"] = outputs_;
    j["checks"] = checks_;
    j["checks_passed"] = passes_;
    j["checks_failed"] = failures_;
    return j;
  }

 private:
  static std::string format_tol(double tol) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", tol);
    return buf;
  }

  static std::string now_iso8601() {
    const auto now = std::chrono::floor<std::chrono::seconds>(
        std::chrono::system_clock::now());
    const auto days = std::chrono::floor<std::chrono::days>(now);
    const auto tod = std::chrono::hh_mm_ss{now - days};
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%sT%02ld:%02ld:%02ldZ",
                  format_date(days).c_str(), long(tod.hours().count()),
                  long(tod.minutes().count()), long(tod.seconds().count()));
    return buf;
  }

  void record(const std::string& id, const std::string& description,
              json expected, json actual, bool pass,
              const std::string& tolerance) {
    (pass ? passes_ : failures_) += 1;
    checks_.push_back({{"id", id},
                       {"description", description},
                       {"expected", std::move(expected)},
                       {"actual", std::move(actual)},
                       {"tolerance", tolerance},
                       {"pass", pass}});
  }

  fs::path out_dir_;
  json outputs_ = json::array();
  json checks_ = json::array();
  int passes_ = 0;
  int failures_ = 0;
};

struct ReportContext {
  const ReportArgs& args;
  fs::path out_dir;
  fs::path tables;
  fs::path figures;
  Manifest manifest;

  ReportContext(const ReportArgs& a)
      : args(a),
        out_dir(a.out_dir),
        tables(out_dir / "tables"),
        figures(out_dir / "figures"),
        manifest(out_dir) {}

  void save_table(const std::string& stem, const Table& table,
                  const std::string& reproduces) {
    const fs::path csv = tables / (stem + ".csv");
    write_file_atomic(csv.string(), table.to_csv());
    manifest.add_output(csv, "table", reproduces);
    const fs::path js = tables / (stem + ".json");
    write_file_atomic(js.string(), table.to_json().dump(2) + "\n");
    manifest.add_output(js, "table-json", reproduces);
  }

  void save_figure(const std::string& stem, const Table& data,
                   const std::string& svg, const std::string& reproduces) {
    const fs::path csv = figures / (stem + ".csv");
    write_file_atomic(csv.string(), data.to_csv());
    manifest.add_output(csv, "figure-data", reproduces);
    const fs::path svg_path = figures / (stem + ".svg");
    write_file_atomic(svg_path.string(), svg);
    manifest.add_output(svg_path, "figure", reproduces);
  }

  void save_json(const fs::path& path, const json& j,
                 const std::string& reproduces) {
    write_file_atomic(path.string(), j.dump(2) + "\n");
    manifest.add_output(path, "json", reproduces);
  }
};

std::string jsonl_string(const std::vector<PersonRecord>& records) {
  std::ostringstream out;
  write_records_jsonl(records, out);
  return std::move(out).str();
}

ConfusionMatrix race_matrix(const std::map<GroupKey, GroupedConfusion>& groups,
                            Race race) {
  const auto it = groups.find(GroupKey{GroupDimension::Race, race});
  return it == groups.end() ? ConfusionMatrix{} : it->second.matrix;
}

/// Binary score by pre/post cutoff among recidivists only (the check that
/// the incorrectly kept recidivists score like the correctly kept ones).
struct RecidScorePrePost {
  long pre_low = 0, post_low = 0, pre_high = 0, post_high = 0;
};

RecidScorePrePost recidivist_score_prepost(const Cohort& cohort, Date cutoff) {
  RecidScorePrePost t;
  for (const auto& r : cohort.records()) {
    const auto outcome = r.outcome(LabelField::TwoYearRecid);
    if (!outcome || !*outcome || !r.has_usable_score()) continue;
    const bool post = r.screen_date > cutoff;
    if (binarize_score(r.decile_score) == BinaryScore::High) {
      (post ? t.post_high : t.pre_high) += 1;
    } else {
      (post ? t.post_low : t.pre_low) += 1;
    }
  }
  return t;
}

}  // namespace

int cmd_report(const ReportArgs& args) {
  ReportContext ctx(args);
  fs::create_directories(ctx.tables);
  fs::create_directories(ctx.figures);
  const fs::path normalized = ctx.out_dir / "normalized";
  fs::create_directories(normalized);

  // ---- ingest ----
  const ParseResult full_parse = parse_full_scores(read_file(args.full_csv_path));
  const ParseResult two_year_parse =
      parse_two_year(read_file(args.two_year_csv_path));

  write_file_atomic((normalized / "full_scores.jsonl").string(),
                    jsonl_string(full_parse.records));
  ctx.manifest.add_output(normalized / "full_scores.jsonl", "records",
                          "normalized full-scores records");
  write_file_atomic((normalized / "two_year.jsonl").string(),
                    jsonl_string(two_year_parse.records));
  ctx.manifest.add_output(normalized / "two_year.jsonl", "records",
                          "normalized two-year records");
  ctx.save_json(ctx.out_dir / "findings-full.json",
                findings_report_json(full_parse), "validation findings, full file");
  ctx.save_json(ctx.out_dir / "findings-two-year.json",
                findings_report_json(two_year_parse),
                "validation findings, two-year file");

  ctx.manifest.check_count("c1.full", "full file record count", 11757,
                           long(full_parse.records.size()));
  ctx.manifest.check_count("c1.two-year", "two-year file record count", 7214,
                           long(two_year_parse.records.size()));

  Table ingest_counts("ingest-counts", {"file", "records", "rejected-rows"});
  ingest_counts.add_row({std::string("full"), long(full_parse.records.size()),
                         full_parse.rejected_rows});
  ingest_counts.add_row({std::string("two-year"),
                         long(two_year_parse.records.size()),
                         two_year_parse.rejected_rows});
  ctx.save_table("ingest-counts", ingest_counts, "source file sizes");

  // ---- cohorts ----
  auto [full_cohort, trim_report] =
      apply_propublica_trims(full_parse.records, args.data_end);
  const Cohort faulty = Cohort::build(
      two_year_parse.records,
      FaultyOrRule{args.window_days, args.data_end}, args.data_end,
      LabelField::TwoYearRecid);
  const Cohort corrected = correct_two_year(faulty, args.cutoff);

  write_file_atomic((normalized / "full_trimmed.jsonl").string(),
                    jsonl_string(full_cohort.records()));
  ctx.manifest.add_output(normalized / "full_trimmed.jsonl", "records",
                          "trimmed full cohort");
  write_file_atomic((normalized / "corrected.jsonl").string(),
                    jsonl_string(corrected.records()));
  ctx.manifest.add_output(normalized / "corrected.jsonl", "records",
                          "corrected two-year cohort");

  Table drops("full-dataset-drops",
              {"input", "dropped-high-ids", "dropped-bad-data",
               "net-additional-bad-data", "remaining"});
  drops.add_row({trim_report.input, trim_report.dropped_high_ids,
                 trim_report.dropped_bad_data,
                 trim_report.net_additional_bad_data, trim_report.remaining});
  ctx.save_table("full-dataset-drops", drops, "upstream trims of the full file");

  ctx.manifest.check_count("c2.remaining", "trimmed full cohort size", 10331,
                           trim_report.remaining);
  ctx.manifest.check_count("c2.high-ids", "high person-id drops", 756,
                           trim_report.dropped_high_ids);
  ctx.manifest.check_count("c2.bad-data", "bad-data rows", 719,
                           trim_report.dropped_bad_data);
  ctx.manifest.check_count("c2.net-additional", "net additional bad-data drops",
                           670, trim_report.net_additional_bad_data);

  // ---- recidivist counts, full vs two-year ----
  const RateResult full_any = recidivism_rate(full_cohort, LabelField::IsRecid);
  const RateResult faulty_any = recidivism_rate(faulty, LabelField::IsRecid);
  Table any_counts("any-recidivism-counts",
                   {"is-recid", "full-data", "two-year-data"});
  any_counts.add_row({std::string("0"), full_any.n0, faulty_any.n0});
  any_counts.add_row({std::string("1"), full_any.n1, faulty_any.n1});
  any_counts.add_row(
      {std::string("total"), full_any.n0 + full_any.n1,
       faulty_any.n0 + faulty_any.n1});
  ctx.save_table("any-recidivism-counts", any_counts,
                 "any recidivism, full vs two-year dataset");
  ctx.manifest.check_count("s1.full-any", "full-data any-recidivists", 3473,
                           full_any.n1);
  ctx.manifest.check_count("s1.two-year-any", "two-year any-recidivists", 3471,
                           faulty_any.n1);

  // any vs two-year cross-tab on the faulty cohort
  long both = 0, any_only = 0, neither = 0, two_only = 0;
  for (const auto& r : faulty.records()) {
    const bool any = r.is_recid == RecidFlag::Yes;
    const bool two = r.two_year_recid && *r.two_year_recid == 1;
    if (any && two) both += 1;
    else if (any) any_only += 1;
    else if (two) two_only += 1;
    else neither += 1;
  }
  Table cross("any-vs-two-year-recidivism",
              {"is-recid", "two-year-0", "two-year-1"});
  cross.add_row({std::string("0"), neither, two_only});
  cross.add_row({std::string("1"), any_only, both});
  ctx.save_table("any-vs-two-year-recidivism", cross,
                 "any vs two-year recidivism cross-tab");
  ctx.manifest.check_count("s2.late-recidivists",
                           "recidivists beyond the window", 220, any_only);

  // ---- pre/post contingency + audit ----
  const PrePostTable prepost_any =
      prepost_contingency(faulty, args.cutoff, LabelField::IsRecid);
  const PrePostTable prepost_two =
      prepost_contingency(faulty, args.cutoff, LabelField::TwoYearRecid);
  ctx.save_table("prepost-any-recidivism", prepost_table(prepost_any, "is-recid"),
                 "any recidivism by pre/post cutoff");
  ctx.save_table("prepost-two-year-recidivism",
                 prepost_table(prepost_two, "two-year-recid"),
                 "two-year recidivism by pre/post cutoff");

  ctx.manifest.check_count("c3.any.pre-neg", "pre-cutoff non-recidivists (any)",
                           3743, prepost_any.pre_negatives);
  ctx.manifest.check_count("c3.any.post-neg", "post-cutoff non-recidivists (any)",
                           0, prepost_any.post_negatives);
  ctx.manifest.check_count("c3.any.pre-pos", "pre-cutoff recidivists (any)",
                           2473, prepost_any.pre_positives);
  ctx.manifest.check_count("c3.any.post-pos", "post-cutoff recidivists (any)",
                           998, prepost_any.post_positives);
  ctx.manifest.check_count("c3.two.pre-neg",
                           "pre-cutoff non-recidivists (two-year)", 3963,
                           prepost_two.pre_negatives);
  ctx.manifest.check_count("c3.two.post-neg",
                           "post-cutoff non-recidivists (two-year)", 0,
                           prepost_two.post_negatives);
  ctx.manifest.check_count("c3.two.pre-pos", "pre-cutoff recidivists (two-year)",
                           2253, prepost_two.pre_positives);
  ctx.manifest.check_count("c3.two.post-pos",
                           "post-cutoff recidivists (two-year)", 998,
                           prepost_two.post_positives);

  const AuditReport audit_any =
      censoring_asymmetry(faulty, args.cutoff, LabelField::IsRecid);
  const AuditReport audit_two =
      censoring_asymmetry(faulty, args.cutoff, LabelField::TwoYearRecid);
  ctx.save_json(ctx.out_dir / "audit-report-any.json", to_json(audit_any),
                "censoring asymmetry report (any recidivism)");
  ctx.save_json(ctx.out_dir / "audit-report-two-year.json", to_json(audit_two),
                "censoring asymmetry report (two-year recidivism)");

  ctx.manifest.check_near("c6.any.share", "excess share (any)", 0.288,
                          audit_any.excess_share, 0.001);
  ctx.manifest.check_near("c6.any.ratio", "excess ratio (any)", 0.404,
                          audit_any.excess_ratio, 0.001);
  ctx.manifest.check_near("c6.two.share", "excess share (two-year)", 0.307,
                          audit_two.excess_share, 0.001);
  ctx.manifest.check_near("c6.two.ratio", "excess ratio (two-year)", 0.443,
                          audit_two.excess_ratio, 0.001);
  ctx.manifest.check_true(
      "c6.verdict", "faulty cohort flagged asymmetric-positives",
      audit_two.verdict == AuditVerdict::AsymmetricPositives);

  // ---- corrected cohort ----
  ctx.manifest.check_count("c4.size", "corrected cohort size", 6216,
                           long(corrected.size()));
  long removed_positive = 0;
  const long removed = long(faulty.size()) - long(corrected.size());
  for (const auto& r : faulty.records()) {
    if (r.screen_date > args.cutoff && r.two_year_recid &&
        *r.two_year_recid == 1) {
      removed_positive += 1;
    }
  }
  ctx.manifest.check_count("c4.removed", "records removed by the correction",
                           998, removed);
  ctx.manifest.check_count("c4.removed-positive",
                           "removed records labeled recidivist", 998,
                           removed_positive);

  // ---- rates ----
  const RateResult faulty_rate = recidivism_rate(faulty, LabelField::TwoYearRecid);
  const RateResult corrected_rate =
      recidivism_rate(corrected, LabelField::TwoYearRecid);
  ctx.save_table("two-year-rate-faulty",
                 rate_table(faulty_rate, "two-year-recid"),
                 "two-year recidivism rate, two-year dataset");
  ctx.save_table("two-year-rate-corrected",
                 rate_table(corrected_rate, "two-year-recid"),
                 "two-year recidivism rate, corrected dataset");

  Table prepost_rates("two-year-rate-by-prepost",
                      {"two-year-recid", "pre-cutoff", "post-cutoff"});
  {
    const double pre_total = double(prepost_two.pre());
    const double post_total = double(prepost_two.post());
    prepost_rates.add_row(
        {std::string("0"),
         pre_total > 0 ? TableCell(prepost_two.pre_negatives / pre_total)
                       : TableCell(std::monostate{}),
         post_total > 0 ? TableCell(prepost_two.post_negatives / post_total)
                        : TableCell(std::monostate{})});
    prepost_rates.add_row(
        {std::string("1"),
         pre_total > 0 ? TableCell(prepost_two.pre_positives / pre_total)
                       : TableCell(std::monostate{}),
         post_total > 0 ? TableCell(prepost_two.post_positives / post_total)
                        : TableCell(std::monostate{})});
  }
  ctx.save_table("two-year-rate-by-prepost", prepost_rates,
                 "two-year recidivism rate by pre/post cutoff");

  ctx.manifest.check_near("c5.faulty-rate", "two-year rate, faulty cohort",
                          0.4507, faulty_rate.rate, 0.001);
  ctx.manifest.check_near("c5.corrected-rate", "two-year rate, corrected cohort",
                          0.3625, corrected_rate.rate, 0.001);
  std::optional<double> rate_diff, rate_inflation;
  if (faulty_rate.rate && corrected_rate.rate) {
    rate_diff = *faulty_rate.rate - *corrected_rate.rate;
    rate_inflation = *rate_diff / *corrected_rate.rate;
  }
  ctx.manifest.check_near("c5.difference", "rate difference", 0.0882, rate_diff,
                          0.001);
  ctx.manifest.check_near("c5.inflation", "relative rate inflation", 0.243,
                          rate_inflation, 0.001);

  // ---- significance tests ----
  std::optional<TestResult> faulty_vs_corrected, corrected_vs_faulty;
  if (faulty_rate.rate && corrected_rate.rate) {
    faulty_vs_corrected = one_sample_proportion_tests(
        faulty_rate.n0 + faulty_rate.n1, faulty_rate.n1, *corrected_rate.rate);
    corrected_vs_faulty = one_sample_proportion_tests(
        corrected_rate.n0 + corrected_rate.n1, corrected_rate.n1,
        *faulty_rate.rate);
    ctx.save_table(
        "significance-tests",
        test_results_table({{"faulty_vs_corrected", &*faulty_vs_corrected},
                            {"corrected_vs_faulty", &*corrected_vs_faulty}}),
        "one-sample significance tests on the recidivism rate");

    const TestResult& f = *faulty_vs_corrected;
    const TestResult& c = *corrected_vs_faulty;
    ctx.manifest.check_near("c9.t-faulty", "t statistic, faulty vs corrected",
                            15.06, f.t_stat, 0.05);
    ctx.manifest.check_near("c9.t-corrected", "t statistic, corrected vs faulty",
                            -14.46, c.t_stat, 0.05);
    ctx.manifest.check_near("c9.chi-faulty", "chi-squared, faulty vs corrected",
                            242.9, f.chi_sq, 0.5);
    ctx.manifest.check_near("c9.chi-corrected",
                            "chi-squared, corrected vs faulty", 195.3, c.chi_sq,
                            0.5);
    ctx.manifest.check_near("c9.se-faulty", "standard error, faulty", 0.006,
                            f.se, 0.0005);
    ctx.manifest.check_near("c9.se-corrected", "standard error, corrected",
                            0.006, c.se, 0.0005);
    ctx.manifest.check_near("c9.ci-low-faulty", "CI low, faulty", 0.439,
                            f.ci_low, 0.001);
    ctx.manifest.check_near("c9.ci-high-faulty", "CI high, faulty", 0.462,
                            f.ci_high, 0.001);
    ctx.manifest.check_near("c9.ci-low-corrected", "CI low, corrected", 0.350,
                            c.ci_low, 0.001);
    ctx.manifest.check_near("c9.ci-high-corrected", "CI high, corrected", 0.374,
                            c.ci_high, 0.001);
    ctx.manifest.check_order_of_magnitude("c9.t-pvalue-faulty",
                                          "t p-value, faulty", 2e-50,
                                          f.t_pvalue);
    ctx.manifest.check_order_of_magnitude("c9.chi-pvalue-faulty",
                                          "chi p-value, faulty", 9e-55,
                                          f.chi_pvalue);
    ctx.manifest.check_order_of_magnitude("c9.t-pvalue-corrected",
                                          "t p-value, corrected", 1e-46,
                                          c.t_pvalue);
    ctx.manifest.check_order_of_magnitude("c9.chi-pvalue-corrected",
                                          "chi p-value, corrected", 2e-44,
                                          c.chi_pvalue);
  }

  // ---- score categories + confusion ----
  const ScoreCategoryCounts faulty_categories = score_category_counts(faulty);
  const ScoreCategoryCounts corrected_categories = score_category_counts(corrected);
  ctx.save_table("score-categories-faulty",
                 score_categories_table(faulty_categories),
                 "score categories, two-year dataset");
  ctx.save_table("score-categories-binary-faulty",
                 binary_score_table(faulty_categories),
                 "binary score categories, two-year dataset");
  ctx.save_table("score-categories-binary-corrected",
                 binary_score_table(corrected_categories),
                 "binary score categories, corrected dataset");
  ctx.manifest.check_count("s5.low", "Low category count", 3897,
                           faulty_categories.low);
  ctx.manifest.check_count("s5.medium", "Medium category count", 1914,
                           faulty_categories.medium);
  ctx.manifest.check_count("s5.high", "High category count", 1403,
                           faulty_categories.high);
  ctx.manifest.check_count("s5.binary-high", "binary High count", 3317,
                           faulty_categories.binary_high());
  ctx.manifest.check_count("s5.corrected-binary-low",
                           "corrected binary Low count", 3522,
                           corrected_categories.binary_low());
  ctx.manifest.check_count("s5.corrected-binary-high",
                           "corrected binary High count", 2694,
                           corrected_categories.binary_high());

  const ConfusionResult faulty_confusion =
      confusion(faulty, LabelField::TwoYearRecid);
  const ConfusionResult corrected_confusion =
      confusion(corrected, LabelField::TwoYearRecid);
  ctx.save_table("confusion-matrix-faulty",
                 confusion_matrix_table(faulty_confusion.matrix),
                 "confusion matrix, two-year dataset");
  ctx.save_table("confusion-matrix-corrected",
                 confusion_matrix_table(corrected_confusion.matrix),
                 "confusion matrix, corrected dataset");
  ctx.save_table(
      "confusion-results-similar",
      confusion_similar_table({{"faulty", &faulty_confusion.matrix},
                               {"corrected", &corrected_confusion.matrix}}),
      "confusion results that barely move");
  ctx.save_table(
      "confusion-results-different",
      confusion_different_table({{"faulty", &faulty_confusion.matrix},
                                 {"corrected", &corrected_confusion.matrix}}),
      "confusion results that shift");

  {
    const ConfusionMatrix& f = faulty_confusion.matrix;
    const ConfusionMatrix& c = corrected_confusion.matrix;
    ctx.manifest.check_count("c7.faulty.tn", "faulty tn", 2681, f.tn);
    ctx.manifest.check_count("c7.faulty.fp", "faulty fp", 1282, f.fp);
    ctx.manifest.check_count("c7.faulty.fn", "faulty fn", 1216, f.fn);
    ctx.manifest.check_count("c7.faulty.tp", "faulty tp", 2035, f.tp);
    ctx.manifest.check_count("c7.corrected.tn", "corrected tn", 2681, c.tn);
    ctx.manifest.check_count("c7.corrected.fp", "corrected fp", 1282, c.fp);
    ctx.manifest.check_count("c7.corrected.fn", "corrected fn", 841, c.fn);
    ctx.manifest.check_count("c7.corrected.tp", "corrected tp", 1412, c.tp);
    const ConfusionStats fs_ = derive_stats(f);
    const ConfusionStats cs = derive_stats(c);
    ctx.manifest.check_near("c7.faulty.accuracy", "faulty accuracy", 0.654,
                            fs_.accuracy, 0.005);
    ctx.manifest.check_near("c7.corrected.accuracy", "corrected accuracy",
                            0.658, cs.accuracy, 0.005);
    ctx.manifest.check_near("c7.faulty.fpr", "faulty fpr", 0.323, fs_.fpr,
                            0.005);
    ctx.manifest.check_bits_equal("c7.fpr-invariant",
                                  "fpr identical across the pair", fs_.fpr,
                                  cs.fpr);
    ctx.manifest.check_near("c7.faulty.fnr", "faulty fnr", 0.374, fs_.fnr,
                            0.005);
    ctx.manifest.check_near("c7.corrected.fnr", "corrected fnr", 0.373, cs.fnr,
                            0.005);
    ctx.manifest.check_near("c7.faulty.ppv", "faulty ppv", 0.61, fs_.ppv, 0.005);
    ctx.manifest.check_near("c7.corrected.ppv", "corrected ppv", 0.52, cs.ppv,
                            0.005);
    ctx.manifest.check_near("c7.faulty.npv", "faulty npv", 0.69, fs_.npv, 0.005);
    ctx.manifest.check_near("c7.corrected.npv", "corrected npv", 0.76, cs.npv,
                            0.005);
    ctx.manifest.check_near("c7.faulty.detection", "faulty detection rate",
                            0.28, fs_.detection_rate, 0.005);
    ctx.manifest.check_near("c7.corrected.detection",
                            "corrected detection rate", 0.23,
                            cs.detection_rate, 0.005);
  }

  // ---- recidivist score mix across the cutoff ----
  const RecidScorePrePost mix = recidivist_score_prepost(faulty, args.cutoff);
  Table mix_counts("recidivist-score-by-prepost",
                   {"high-score", "pre-cutoff", "post-cutoff"});
  mix_counts.add_row({std::string("0"), mix.pre_low, mix.post_low});
  mix_counts.add_row({std::string("1"), mix.pre_high, mix.post_high});
  mix_counts.add_row({std::string("total"), mix.pre_low + mix.pre_high,
                      mix.post_low + mix.post_high});
  ctx.save_table("recidivist-score-by-prepost", mix_counts,
                 "recidivist binary score by pre/post cutoff, counts");
  Table mix_rates("recidivist-score-by-prepost-rates",
                  {"high-score", "pre-cutoff", "post-cutoff"});
  mix_rates.rate_digits = 2;
  {
    const double pre = double(std::max(mix.pre_low + mix.pre_high, 1L));
    const double post = double(std::max(mix.post_low + mix.post_high, 1L));
    mix_rates.add_row(
        {std::string("0"), double(mix.pre_low) / pre, double(mix.post_low) / post});
    mix_rates.add_row({std::string("1"), double(mix.pre_high) / pre,
                       double(mix.post_high) / post});
  }
  ctx.save_table("recidivist-score-by-prepost-rates", mix_rates,
                 "recidivist binary score by pre/post cutoff, shares");

  // ---- by-race confusion ----
  const auto faulty_by_race =
      grouped_confusion(faulty, LabelField::TwoYearRecid, GroupDimension::Race);
  const auto corrected_by_race = grouped_confusion(
      corrected, LabelField::TwoYearRecid, GroupDimension::Race);
  const ConfusionMatrix blacks_faulty =
      race_matrix(faulty_by_race, Race::AfricanAmerican);
  const ConfusionMatrix whites_faulty =
      race_matrix(faulty_by_race, Race::Caucasian);
  const ConfusionMatrix blacks_corrected =
      race_matrix(corrected_by_race, Race::AfricanAmerican);
  const ConfusionMatrix whites_corrected =
      race_matrix(corrected_by_race, Race::Caucasian);

  ctx.save_table("blacks-confusion-matrix-faulty",
                 confusion_matrix_table(blacks_faulty),
                 "confusion matrix, African-American defendants, two-year dataset");
  ctx.save_table("whites-confusion-matrix-faulty",
                 confusion_matrix_table(whites_faulty),
                 "confusion matrix, Caucasian defendants, two-year dataset");
  ctx.save_table("blacks-confusion-matrix-corrected",
                 confusion_matrix_table(blacks_corrected),
                 "confusion matrix, African-American defendants, corrected dataset");
  ctx.save_table("whites-confusion-matrix-corrected",
                 confusion_matrix_table(whites_corrected),
                 "confusion matrix, Caucasian defendants, corrected dataset");
  ctx.save_table(
      "blacks-confusion-results-similar",
      confusion_similar_table({{"faulty_blacks", &blacks_faulty},
                               {"corrected_blacks", &blacks_corrected}}),
      "by-race confusion results that barely move");
  ctx.save_table(
      "whites-confusion-results-similar",
      confusion_similar_table({{"faulty_whites", &whites_faulty},
                               {"corrected_whites", &whites_corrected}}),
      "by-race confusion results that barely move");
  ctx.save_table(
      "blacks-confusion-results-different",
      confusion_different_table({{"faulty_blacks", &blacks_faulty},
                                 {"corrected_blacks", &blacks_corrected}}),
      "by-race confusion results that shift");
  ctx.save_table(
      "whites-confusion-results-different",
      confusion_different_table({{"faulty_whites", &whites_faulty},
                                 {"corrected_whites", &whites_corrected}}),
      "by-race confusion results that shift");

  auto check_matrix = [&](const std::string& id, const std::string& what,
                          const ConfusionMatrix& m, long tn, long fp, long fn,
                          long tp) {
    ctx.manifest.check_count(id + ".tn", what + " tn", tn, m.tn);
    ctx.manifest.check_count(id + ".fp", what + " fp", fp, m.fp);
    ctx.manifest.check_count(id + ".fn", what + " fn", fn, m.fn);
    ctx.manifest.check_count(id + ".tp", what + " tp", tp, m.tp);
  };
  check_matrix("c8.blacks-faulty", "blacks faulty", blacks_faulty, 990, 805,
               532, 1369);
  check_matrix("c8.whites-faulty", "whites faulty", whites_faulty, 1139, 349,
               461, 505);
  check_matrix("c8.blacks-corrected", "blacks corrected", blacks_corrected, 990,
               805, 375, 969);
  check_matrix("c8.whites-corrected", "whites corrected", whites_corrected,
               1139, 349, 314, 330);
  {
    const ConfusionStats bf = derive_stats(blacks_faulty);
    const ConfusionStats bc = derive_stats(blacks_corrected);
    const ConfusionStats wf = derive_stats(whites_faulty);
    const ConfusionStats wc = derive_stats(whites_corrected);
    ctx.manifest.check_near("c8.blacks-faulty.accuracy", "blacks faulty accuracy",
                            0.638, bf.accuracy, 0.005);
    ctx.manifest.check_near("c8.blacks-faulty.fpr", "blacks faulty fpr", 0.448,
                            bf.fpr, 0.005);
    ctx.manifest.check_near("c8.blacks-faulty.fnr", "blacks faulty fnr", 0.280,
                            bf.fnr, 0.005);
    ctx.manifest.check_near("c8.blacks-corrected.accuracy",
                            "blacks corrected accuracy", 0.624, bc.accuracy,
                            0.005);
    ctx.manifest.check_near("c8.blacks-corrected.fnr", "blacks corrected fnr",
                            0.279, bc.fnr, 0.005);
    ctx.manifest.check_near("c8.whites-faulty.accuracy", "whites faulty accuracy",
                            0.670, wf.accuracy, 0.005);
    ctx.manifest.check_near("c8.whites-faulty.fpr", "whites faulty fpr", 0.235,
                            wf.fpr, 0.005);
    ctx.manifest.check_near("c8.whites-faulty.fnr", "whites faulty fnr", 0.477,
                            wf.fnr, 0.005);
    ctx.manifest.check_near("c8.whites-corrected.accuracy",
                            "whites corrected accuracy", 0.689, wc.accuracy,
                            0.005);
    ctx.manifest.check_near("c8.whites-corrected.fnr", "whites corrected fnr",
                            0.488, wc.fnr, 0.005);
    ctx.manifest.check_near("c8.blacks-faulty.prevalence",
                            "blacks faulty prevalence", 0.51, bf.prevalence,
                            0.005);
    ctx.manifest.check_near("c8.blacks-faulty.ppv", "blacks faulty ppv", 0.63,
                            bf.ppv, 0.005);
    ctx.manifest.check_near("c8.blacks-faulty.npv", "blacks faulty npv", 0.65,
                            bf.npv, 0.005);
    ctx.manifest.check_near("c8.blacks-faulty.detection",
                            "blacks faulty detection", 0.37, bf.detection_rate,
                            0.005);
    ctx.manifest.check_near("c8.blacks-corrected.prevalence",
                            "blacks corrected prevalence", 0.43, bc.prevalence,
                            0.005);
    ctx.manifest.check_near("c8.blacks-corrected.ppv", "blacks corrected ppv",
                            0.55, bc.ppv, 0.005);
    ctx.manifest.check_near("c8.blacks-corrected.npv", "blacks corrected npv",
                            0.73, bc.npv, 0.005);
    ctx.manifest.check_near("c8.blacks-corrected.detection",
                            "blacks corrected detection", 0.31,
                            bc.detection_rate, 0.005);
    ctx.manifest.check_near("c8.whites-faulty.prevalence",
                            "whites faulty prevalence", 0.39, wf.prevalence,
                            0.005);
    ctx.manifest.check_near("c8.whites-faulty.ppv", "whites faulty ppv", 0.59,
                            wf.ppv, 0.005);
    ctx.manifest.check_near("c8.whites-faulty.npv", "whites faulty npv", 0.71,
                            wf.npv, 0.005);
    ctx.manifest.check_near("c8.whites-faulty.detection",
                            "whites faulty detection", 0.21, wf.detection_rate,
                            0.005);
    ctx.manifest.check_near("c8.whites-corrected.prevalence",
                            "whites corrected prevalence", 0.30, wc.prevalence,
                            0.005);
    ctx.manifest.check_near("c8.whites-corrected.ppv", "whites corrected ppv",
                            0.49, wc.ppv, 0.005);
    ctx.manifest.check_near("c8.whites-corrected.npv", "whites corrected npv",
                            0.78, wc.npv, 0.005);
    ctx.manifest.check_near("c8.whites-corrected.detection",
                            "whites corrected detection", 0.15,
                            wc.detection_rate, 0.005);
  }

  // ---- sex counts ----
  const SexCounts faulty_sex = sex_counts(faulty);
  const SexCounts corrected_sex = sex_counts(corrected);
  Table sexes("sex-counts", {"sex", "faulty", "corrected"});
  sexes.add_row({std::string("Female"), faulty_sex.female, corrected_sex.female});
  sexes.add_row({std::string("Male"), faulty_sex.male, corrected_sex.male});
  sexes.add_row({std::string("total"),
                 faulty_sex.female + faulty_sex.male + faulty_sex.unknown,
                 corrected_sex.female + corrected_sex.male +
                     corrected_sex.unknown});
  ctx.save_table("sex-counts", sexes, "sex counts across the pair");
  ctx.manifest.check_count("s3.female-faulty", "female count, faulty", 1395,
                           faulty_sex.female);
  ctx.manifest.check_count("s3.male-faulty", "male count, faulty", 5819,
                           faulty_sex.male);
  ctx.manifest.check_count("s3.female-corrected", "female count, corrected",
                           1213, corrected_sex.female);
  ctx.manifest.check_count("s3.male-corrected", "male count, corrected", 5003,
                           corrected_sex.male);

  // ---- histograms ----
  const auto save_histogram = [&](const std::string& stem, const Cohort& c,
                                  std::optional<LabelField> split,
                                  const std::string& title,
                                  const std::string& reproduces) {
    const auto series = histogram_by_screen_date(c, 7, split);
    ctx.save_figure(stem, histogram_table(series),
                    histogram_svg(series, title, args.cutoff), reproduces);
  };
  save_histogram("screen-date-full", full_cohort, std::nullopt,
                 "Persons by screen date, full dataset",
                 "screen-date histogram, full dataset");
  save_histogram("screen-date-two-year", faulty, std::nullopt,
                 "Persons by screen date, two-year dataset",
                 "screen-date histogram, two-year dataset");
  save_histogram("screen-date-full-by-outcome", full_cohort,
                 LabelField::IsRecid,
                 "Persons by screen date and outcome, full dataset",
                 "screen-date histogram by outcome, full dataset");
  save_histogram("screen-date-two-year-by-outcome", faulty,
                 LabelField::IsRecid,
                 "Persons by screen date and outcome, two-year dataset",
                 "screen-date histogram by outcome, two-year dataset");
  save_histogram("screen-date-corrected-by-outcome", corrected,
                 LabelField::IsRecid,
                 "Persons by screen date and outcome, corrected dataset",
                 "screen-date histogram by outcome, corrected dataset");

  // ---- rate by decile ----
  const DecileRates faulty_decile_rates =
      rate_by_decile(faulty, LabelField::TwoYearRecid);
  const DecileRates corrected_decile_rates =
      rate_by_decile(corrected, LabelField::TwoYearRecid);
  {
    const std::vector<std::pair<std::string, const DecileRates*>> series = {
        {"faulty", &faulty_decile_rates},
        {"corrected", &corrected_decile_rates}};
    ctx.save_figure("rate-by-decile", rate_by_decile_table(series),
                    rate_by_decile_svg(series, true),
                    "two-year recidivism rate by score decile");
    bool all_above = true;
    for (size_t d = 0; d < 10; ++d) {
      if (!faulty_decile_rates[d].rate || !corrected_decile_rates[d].rate ||
          !(*faulty_decile_rates[d].rate > *corrected_decile_rates[d].rate)) {
        all_above = false;
      }
    }
    ctx.manifest.check_true("s4.decile-dominance",
                            "faulty rate above corrected at every decile",
                            all_above);
  }
  for (const auto dim : {GroupDimension::Race, GroupDimension::Sex}) {
    const std::string dim_name = dim == GroupDimension::Race ? "race" : "sex";
    for (const auto& [cohort_name, cohort_ptr] :
         std::vector<std::pair<std::string, const Cohort*>>{
             {"faulty", &faulty}, {"corrected", &corrected}}) {
      const auto grouped =
          rate_by_decile_grouped(*cohort_ptr, LabelField::TwoYearRecid, dim);
      std::vector<std::pair<std::string, const DecileRates*>> series;
      for (const auto& [key, rates] : grouped) {
        if (dim == GroupDimension::Race) {
          const Race race = std::get<Race>(key.value);
          if (race != Race::AfricanAmerican && race != Race::Caucasian) continue;
        }
        series.emplace_back(to_string(key), &rates);
      }
      ctx.save_figure("rate-by-decile-by-" + dim_name + "-" + cohort_name,
                      rate_by_decile_table(series),
                      rate_by_decile_svg(series, false),
                      "two-year recidivism rate by decile and " + dim_name +
                          ", " + cohort_name + " dataset");
    }
  }

  // ---- decile distribution and crossing ----
  const DecileDistribution faulty_dist =
      decile_distribution_by_outcome(faulty, LabelField::TwoYearRecid);
  const DecileDistribution corrected_dist =
      decile_distribution_by_outcome(corrected, LabelField::TwoYearRecid);
  ctx.save_figure("decile-distribution-faulty",
                  decile_distribution_table(faulty_dist),
                  decile_distribution_svg({{"faulty", &faulty_dist}}),
                  "score decile distribution by outcome, two-year dataset");
  ctx.save_figure("decile-distribution-corrected",
                  decile_distribution_table(corrected_dist),
                  decile_distribution_svg({{"corrected", &corrected_dist}}),
                  "score decile distribution by outcome, corrected dataset");
  ctx.manifest.check_near("c13.crossing-faulty",
                          "count-curve crossing decile, faulty", 5.34,
                          faulty_dist.crossing, 0.25);
  ctx.manifest.check_near("c13.crossing-corrected",
                          "count-curve crossing decile, corrected", 6.9,
                          corrected_dist.crossing, 0.25);

  // ---- survival ----
  {
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
    ctx.save_figure("survival-curves", km_table_multi(curves),
                    km_svg(curves, args.window_days),
                    "non-recidivism survival curves, three datasets");
    const double full_share = recidivated_share_at(full_curve, args.window_days);
    const double faulty_share =
        recidivated_share_at(faulty_curve, args.window_days);
    const double corrected_share =
        recidivated_share_at(corrected_curve, args.window_days);
    Table marks("recidivated-share-at-window", {"dataset", "share"});
    marks.add_row({std::string("full"), full_share});
    marks.add_row({std::string("faulty"), faulty_share});
    marks.add_row({std::string("corrected"), corrected_share});
    ctx.save_table("recidivated-share-at-window", marks,
                   "recidivated share at the two-year mark");
    ctx.manifest.check_near("c10.full", "survival share at window, full", 0.342,
                            full_share, 0.005);
    ctx.manifest.check_near("c10.faulty", "survival share at window, faulty",
                            0.459, faulty_share, 0.005);
    ctx.manifest.check_near("c10.corrected",
                            "survival share at window, corrected", 0.368,
                            corrected_share, 0.005);
  }

  // ---- quarterly rates + alternative cutoff ----
  {
    const auto rates = quarterly_rates(faulty);
    ctx.save_table("quarterly-recidivism-rates", quarterly_rates_table(rates),
                   "two-year recidivism rate by screen-date year-quarter");
    const double expected[] = {0.384, 0.354, 0.355, 0.353,
                               0.352, 0.991, 1.000, 1.000};
    for (size_t i = 0; i < rates.size() && i < 8; ++i) {
      ctx.manifest.check_near("c11.q" + to_string(rates[i].quarter),
                              "quarterly rate " + to_string(rates[i].quarter),
                              expected[i], rates[i].rate1, 0.002);
    }

    Table alt("rate-with-cutoff", {"cutoff", "rate"});
    const std::optional<double> rate_default =
        rate_with_cutoff(faulty, args.cutoff);
    const std::optional<double> rate_alt =
        rate_with_cutoff(faulty, args.alt_cutoff);
    alt.add_row({format_date(args.cutoff), cell(rate_default)});
    alt.add_row({format_date(args.alt_cutoff), cell(rate_alt)});
    ctx.save_table("rate-with-cutoff", alt,
                   "two-year recidivism rate under alternative cutoffs");
    ctx.manifest.check_near("c12.default-cutoff", "rate at the nominal cutoff",
                            0.362, rate_default, 0.002);
    ctx.manifest.check_near("c12.alt-cutoff", "rate at the earlier cutoff",
                            0.363, rate_alt, 0.002);
  }

  // ---- fraction observed (cutoff explorer) ----
  {
    const auto bins = fraction_observed(full_cohort, 7, args.window_days);
    ctx.save_figure("fraction-observed", fraction_observed_table(bins),
                    fraction_observed_svg(bins, args.cutoff, args.alt_cutoff),
                    "fraction of non-recidivists observed two free years");
    bool post_cutoff_zero = true;
    for (const auto& b : bins) {
      if (days_between(args.cutoff, b.bin_start) > 0 && b.fraction &&
          *b.fraction > 0) {
        post_cutoff_zero = false;
      }
    }
    ctx.manifest.check_true("s6.post-cutoff-zero",
                            "observed fraction zero after the cutoff",
                            post_cutoff_zero);
  }

  // ---- ROC ----
  {
    const RocCurve faulty_curve = roc_points(faulty, LabelField::TwoYearRecid);
    const RocCurve corrected_curve =
        roc_points(corrected, LabelField::TwoYearRecid);
    const std::vector<std::pair<std::string, const RocCurve*>> curves = {
        {"faulty", &faulty_curve}, {"corrected", &corrected_curve}};
    ctx.save_figure("roc-curves", roc_table_multi(curves),
                    roc_svg(curves, kBinaryScoreThreshold),
                    "ROC curves across decile thresholds");
    const double faulty_auc = auc(faulty_curve);
    const double corrected_auc = auc(corrected_curve);
    Table aucs("roc-auc", {"dataset", "auc"});
    aucs.rate_digits = 6;
    aucs.add_row({std::string("faulty"), faulty_auc});
    aucs.add_row({std::string("corrected"), corrected_auc});
    ctx.save_table("roc-auc", aucs, "area under the ROC curves");
    ctx.manifest.check_true(
        "c13.auc-close", "AUC gap below 0.01",
        std::fabs(faulty_auc - corrected_auc) < 0.01);

    // the k=5 operating point must reproduce the binary-split matrix
    const ConfusionStats fstats = derive_stats(faulty_confusion.matrix);
    for (const auto& p : faulty_curve.points) {
      if (p.threshold != kBinaryScoreThreshold) continue;
      ctx.manifest.check_true("c13.k5-matrix",
                              "threshold-5 point equals the binary matrix",
                              p.matrix == faulty_confusion.matrix);
      ctx.manifest.check_bits_equal("c13.k5-fpr",
                                    "threshold-5 fpr equals binary-split fpr",
                                    p.fpr, fstats.fpr);
    }
  }

  // ---- manifest ----
  const json manifest = ctx.manifest.to_json(
      json{{"full", args.full_csv_path}, {"two_year", args.two_year_csv_path}});
  write_file_atomic((ctx.out_dir / "manifest.json").string(),
                    manifest.dump(2) + "\n");

  std::cout << "checks passed: " << ctx.manifest.passes()
            << ", failed: " << ctx.manifest.failures() << "\n";
  if (ctx.manifest.failures() > 0) {
    for (const auto& check : manifest["checks"]) {
      if (!check["pass"].get<bool>()) {
        std::cout << "  FAIL " << check["id"].get<std::string>() << ": "
                  << check["description"].get<std::string>() << " expected "
                  << check["expected"].dump() << " got "
                  << check["actual"].dump() << "\n";
      }
    }
    if (args.strict) return kExitChecksFailed;
  }
  return kExitOk;
}

}  // namespace recidaudit::cli
