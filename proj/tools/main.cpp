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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "recidaudit/dates.hpp"
#include "recidaudit/ingest.hpp"

namespace {

using nlohmann::json;
using namespace recidaudit;
using namespace recidaudit::cli;

/// Flat JSON file mirroring the long option names, e.g.
/// {"cutoff": "2014-04-01", "window-days": 730}. Command-line flags win.
json load_config(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      std::ifstream in(argv[i + 1]);
      if (!in) {
        throw std::runtime_error(std::string("cannot open config: ") +
                                 argv[i + 1]);
      }
      return json::parse(in);
    }
  }
  return json::object();
}

struct Defaults {
  json config;

  std::string str(const std::string& key, const std::string& fallback) const {
    if (config.contains(key)) {
      if (config[key].is_string()) return config[key].get<std::string>();
      return config[key].dump();
    }
    return fallback;
  }
  int integer(const std::string& key, int fallback) const {
    if (config.contains(key) && config[key].is_number_integer()) {
      return config[key].get<int>();
    }
    return fallback;
  }
};

Date require_date(const std::string& text, const std::string& flag) {
  const auto d = parse_date(text);
  if (!d) {
    throw CLI::ValidationError(flag, "expected YYYY-MM-DD, got '" + text + "'");
  }
  return *d;
}

LabelField parse_label(const std::string& text) {
  if (text == "two-year") return LabelField::TwoYearRecid;
  if (text == "is-recid") return LabelField::IsRecid;
  throw CLI::ValidationError("--label", "expected two-year or is-recid");
}

}  // namespace

int main(int argc, char** argv) {
  Defaults defaults;
  try {
    defaults.config = load_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  CLI::App app{
      "recidaudit: cohort construction, censoring-bias audit and fairness "
      "metrics for recidivism score data"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON file with defaults for any long option");

  // shared option values
  std::string cutoff_str = defaults.str("cutoff", "2014-04-01");
  std::string alt_cutoff_str = defaults.str("alt-cutoff", "2014-01-15");
  std::string data_end_str = defaults.str("data-end", "2016-04-01");
  int window_days = defaults.integer("window-days", 730);
  std::string label_str = defaults.str("label", "two-year");

  auto add_common = [&](CLI::App* cmd, bool with_label) {
    cmd->add_option("--cutoff", cutoff_str, "screen-date cutoff (YYYY-MM-DD)")
        ->capture_default_str();
    cmd->add_option("--data-end", data_end_str,
                    "end of the observation window (YYYY-MM-DD)")
        ->capture_default_str();
    cmd->add_option("--window-days", window_days, "follow-up window in days")
        ->capture_default_str();
    if (with_label) {
      cmd->add_option("--label", label_str, "outcome label: two-year | is-recid")
          ->capture_default_str();
    }
  };

  // ingest
  IngestArgs ingest_args;
  auto* ingest_cmd =
      app.add_subcommand("ingest", "parse and validate the source CSV files");
  ingest_cmd->add_option("--full", ingest_args.full_path, "full-scores CSV");
  ingest_cmd->add_option("--two-year", ingest_args.two_year_path,
                         "two-year recidivism CSV");
  ingest_cmd->add_option("--out", ingest_args.out_dir, "output directory")
      ->required();

  // audit
  AuditArgs audit_args{};
  auto* audit_cmd = app.add_subcommand(
      "audit", "detect label-conditional censoring asymmetry");
  audit_cmd
      ->add_option("--two-year", audit_args.two_year_path,
                   "normalized two-year records (jsonl)")
      ->required();
  add_common(audit_cmd, true);

  // correct
  CorrectArgs correct_args{};
  auto* correct_cmd =
      app.add_subcommand("correct", "apply the screen-date cutoff correction");
  correct_cmd
      ->add_option("--two-year", correct_args.two_year_path,
                   "normalized two-year records (jsonl)")
      ->required();
  correct_cmd->add_option("--out", correct_args.out_path, "corrected jsonl path")
      ->required();
  add_common(correct_cmd, false);

  // metrics
  MetricsArgs metrics_args{};
  std::string by_str;
  auto* metrics_cmd =
      app.add_subcommand("metrics", "rates, confusion matrices and breakdowns");
  metrics_cmd
      ->add_option("--cohort", metrics_args.cohort_path,
                   "normalized cohort records (jsonl)")
      ->required();
  metrics_cmd->add_option("--by", by_str, "grouping: race | sex | decile");
  metrics_cmd->add_option("--out", metrics_args.out_dir, "output directory")
      ->default_val(".");
  add_common(metrics_cmd, true);

  // tests
  TestsArgs tests_args{};
  std::string tests_out;
  auto* tests_cmd = app.add_subcommand(
      "tests", "one-sample significance tests between two cohorts");
  tests_cmd->add_option("--cohort-a", tests_args.cohort_a_path, "cohort A jsonl")
      ->required();
  tests_cmd->add_option("--cohort-b", tests_args.cohort_b_path, "cohort B jsonl")
      ->required();
  tests_cmd->add_option("--out", tests_out, "also write the CSV here");
  add_common(tests_cmd, true);

  // survival
  SurvivalArgs survival_args{};
  auto* survival_cmd =
      app.add_subcommand("survival", "Kaplan-Meier curves for three cohorts");
  survival_cmd
      ->add_option("--full", survival_args.full_path,
                   "normalized full-scores records (trims applied here)")
      ->required();
  survival_cmd->add_option("--faulty", survival_args.faulty_path,
                           "normalized two-year records")
      ->required();
  survival_cmd
      ->add_option("--corrected", survival_args.corrected_path,
                   "normalized corrected records")
      ->required();
  survival_cmd->add_option("--out", survival_args.out_dir, "output directory")
      ->default_val(".");
  add_common(survival_cmd, false);

  // roc
  RocArgs roc_args{};
  auto* roc_cmd =
      app.add_subcommand("roc", "ROC curves and AUC for the cohort pair");
  roc_cmd->add_option("--faulty", roc_args.faulty_path, "two-year jsonl")
      ->required();
  roc_cmd->add_option("--corrected", roc_args.corrected_path, "corrected jsonl")
      ->required();
  roc_cmd->add_option("--out", roc_args.out_dir, "output directory")
      ->default_val(".");
  add_common(roc_cmd, true);

  // cutoff-explore
  CutoffExploreArgs cutoff_args{};
  auto* cutoff_cmd = app.add_subcommand(
      "cutoff-explore", "observed-fraction series and quarterly rates");
  cutoff_cmd
      ->add_option("--full", cutoff_args.full_path,
                   "normalized full-scores records (trims applied here)")
      ->required();
  cutoff_cmd
      ->add_option("--two-year", cutoff_args.two_year_path, "two-year jsonl")
      ->required();
  cutoff_cmd->add_option("--out", cutoff_args.out_dir, "output directory")
      ->default_val(".");
  cutoff_cmd
      ->add_option("--alt-cutoff", alt_cutoff_str,
                   "earlier reference cutoff (YYYY-MM-DD)")
      ->capture_default_str();
  add_common(cutoff_cmd, false);

  // report
  ReportArgs report_args{};
  bool report_all = false;
  auto* report_cmd = app.add_subcommand(
      "report", "run the full reproduction and write the output manifest");
  report_cmd->add_flag("--all", report_all, "run every analysis");
  report_cmd->add_option("--full", report_args.full_csv_path, "full-scores CSV")
      ->required();
  report_cmd
      ->add_option("--two-year", report_args.two_year_csv_path,
                   "two-year recidivism CSV")
      ->required();
  report_cmd->add_option("--out", report_args.out_dir, "output directory")
      ->required();
  report_cmd->add_flag("--strict", report_args.strict,
                       "exit 4 when an embedded expected value fails");
  report_cmd
      ->add_option("--alt-cutoff", alt_cutoff_str,
                   "earlier reference cutoff (YYYY-MM-DD)")
      ->capture_default_str();
  add_common(report_cmd, false);

  CLI11_PARSE(app, argc, argv);

  try {
    const Date cutoff = require_date(cutoff_str, "--cutoff");
    const Date alt_cutoff = require_date(alt_cutoff_str, "--alt-cutoff");
    const Date data_end = require_date(data_end_str, "--data-end");
    const LabelField label = parse_label(label_str);

    if (ingest_cmd->parsed()) return cmd_ingest(ingest_args);
    if (audit_cmd->parsed()) {
      audit_args.cutoff = cutoff;
      audit_args.label = label;
      audit_args.data_end = data_end;
      return cmd_audit(audit_args);
    }
    if (correct_cmd->parsed()) {
      correct_args.cutoff = cutoff;
      correct_args.data_end = data_end;
      return cmd_correct(correct_args);
    }
    if (metrics_cmd->parsed()) {
      if (!by_str.empty()) metrics_args.by = by_str;
      metrics_args.label = label;
      metrics_args.data_end = data_end;
      return cmd_metrics(metrics_args);
    }
    if (tests_cmd->parsed()) {
      if (!tests_out.empty()) tests_args.out_path = tests_out;
      tests_args.label = label;
      tests_args.data_end = data_end;
      return cmd_tests(tests_args);
    }
    if (survival_cmd->parsed()) {
      survival_args.data_end = data_end;
      survival_args.window_days = window_days;
      return cmd_survival(survival_args);
    }
    if (roc_cmd->parsed()) {
      roc_args.label = label;
      roc_args.data_end = data_end;
      return cmd_roc(roc_args);
    }
    if (cutoff_cmd->parsed()) {
      cutoff_args.cutoff = cutoff;
      cutoff_args.alt_cutoff = alt_cutoff;
      cutoff_args.data_end = data_end;
      cutoff_args.window_days = window_days;
      return cmd_cutoff_explore(cutoff_args);
    }
    if (report_cmd->parsed()) {
      report_args.cutoff = cutoff;
      report_args.alt_cutoff = alt_cutoff;
      report_args.data_end = data_end;
      report_args.window_days = window_days;
      return cmd_report(report_args);
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
