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

#ifndef RECIDAUDIT_TOOLS_COMMANDS_HPP_
#define RECIDAUDIT_TOOLS_COMMANDS_HPP_

#include <optional>
#include <string>

#include "recidaudit/records.hpp"

namespace recidaudit::cli {

// Machine exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;      // missing file / fatal schema
inline constexpr int kExitAsymmetric = 3;    // audit verdict not symmetric
inline constexpr int kExitChecksFailed = 4;  // report --strict mismatch

struct IngestArgs {
  std::string full_path;      // may be empty
  std::string two_year_path;  // may be empty
  std::string out_dir;
};

struct AuditArgs {
  std::string two_year_path;  // normalized records
  Date cutoff;
  LabelField label;
  Date data_end;
};

struct CorrectArgs {
  std::string two_year_path;
  Date cutoff;
  Date data_end;
  std::string out_path;
};

struct MetricsArgs {
  std::string cohort_path;
  std::optional<std::string> by;  // race | sex | decile
  LabelField label;
  Date data_end;
  std::string out_dir;
};

struct TestsArgs {
  std::string cohort_a_path;
  std::string cohort_b_path;
  LabelField label;
  Date data_end;
  std::optional<std::string> out_path;
};

struct SurvivalArgs {
  std::string full_path;
  std::string faulty_path;
  std::string corrected_path;
  Date data_end;
  int window_days;
  std::string out_dir;
};

struct RocArgs {
  std::string faulty_path;
  std::string corrected_path;
  LabelField label;
  Date data_end;
  std::string out_dir;
};

struct CutoffExploreArgs {
  std::string full_path;
  std::string two_year_path;
  Date cutoff;
  Date alt_cutoff;
  Date data_end;
  int window_days;
  std::string out_dir;
};

struct ReportArgs {
  std::string full_csv_path;
  std::string two_year_csv_path;
  std::string out_dir;
  Date cutoff;
  Date alt_cutoff;
  Date data_end;
  int window_days;
  bool strict = false;
};

int cmd_ingest(const IngestArgs& args);
int cmd_audit(const AuditArgs& args);
int cmd_correct(const CorrectArgs& args);
int cmd_metrics(const MetricsArgs& args);
int cmd_tests(const TestsArgs& args);
int cmd_survival(const SurvivalArgs& args);
int cmd_roc(const RocArgs& args);
int cmd_cutoff_explore(const CutoffExploreArgs& args);
int cmd_report(const ReportArgs& args);

}  // namespace recidaudit::cli

#endif  // RECIDAUDIT_TOOLS_COMMANDS_HPP_
