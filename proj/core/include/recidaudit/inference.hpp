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

#ifndef RECIDAUDIT_INFERENCE_HPP_
#define RECIDAUDIT_INFERENCE_HPP_

#include <optional>
#include <string>

namespace recidaudit {

/// One-sample proportion test against a fixed null rate. The t statistic
/// divides by the sample standard error sqrt(p(1-p)/n); the chi-squared
/// statistic uses the null variance, n(p-p0)^2 / (p0(1-p0)). Both are
/// needed to reproduce the reference results from the same inputs.
struct TestResult {
  long n = 0;
  double mean = 0;
  double se = 0;        // sample-based
  double ci_low = 0;    // 95% Wald interval
  double ci_high = 0;
  double null_p0 = 0;
  std::optional<double> t_stat;     // undefined when se == 0
  std::optional<double> t_pvalue;   // two-sided, n-1 df
  double chi_sq = 0;                // 1 df, defined even at degenerate means
  double chi_pvalue = 1;
};

/// Throws std::domain_error unless 0 < null_p0 < 1, 0 <= successes <= n,
/// n > 1.
TestResult one_sample_proportion_tests(long n, long successes, double null_p0);

/// Upper tail of the 1-df chi-squared distribution via the erfc identity.
double chi_sq_1df_pvalue(double x);

/// Two-sided Student-t p-value with df degrees of freedom.
double t_pvalue(double t, double df);

/// "2e-50"-style display: one significant digit in scientific notation
/// for small values, three decimals otherwise.
std::string format_pvalue(double p);

}  // namespace recidaudit

#endif  // RECIDAUDIT_INFERENCE_HPP_
