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

#include "recidaudit/inference.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace recidaudit {

namespace {
constexpr double kZ95 = 1.96;
}

TestResult one_sample_proportion_tests(long n, long successes, double null_p0) {
  if (!(null_p0 > 0.0 && null_p0 < 1.0)) {
    throw std::domain_error("null_p0 must lie strictly inside (0,1)");
  }
  if (successes < 0 || successes > n) {
    throw std::domain_error("successes must lie in [0, n]");
  }
  if (n <= 1) throw std::domain_error("n must exceed 1");

  TestResult result;
  result.n = n;
  result.null_p0 = null_p0;
  const double p = double(successes) / double(n);
  result.mean = p;
  result.se = std::sqrt(p * (1.0 - p) / double(n));
  result.ci_low = p - kZ95 * result.se;
  result.ci_high = p + kZ95 * result.se;

  if (result.se > 0) {
    const double t = (p - null_p0) / result.se;
    result.t_stat = t;
    result.t_pvalue = t_pvalue(t, double(n - 1));
  }

  const double d = p - null_p0;
  result.chi_sq = double(n) * d * d / (null_p0 * (1.0 - null_p0));
  result.chi_pvalue = chi_sq_1df_pvalue(result.chi_sq);
  return result;
}

double chi_sq_1df_pvalue(double x) {
  if (x < 0) throw std::domain_error("chi-squared statistic must be >= 0");
  return std::erfc(std::sqrt(x / 2.0));
}

double t_pvalue(double t, double df) {
  if (df < 1) throw std::domain_error("t-test df must be >= 1");
  const boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

std::string format_pvalue(double p) {
  char buf[32];
  if (p < 1e-3) {
    std::snprintf(buf, sizeof(buf), "%.0e", p);
    // strip the exponent's leading zero / plus: 2e-50, not 2e-050
    std::string s(buf);
    const auto e = s.find('e');
    if (e != std::string::npos) {
      std::string exp = s.substr(e + 1);
      const bool neg = !exp.empty() && exp[0] == '-';
      if (!exp.empty() && (exp[0] == '-' || exp[0] == '+')) exp.erase(0, 1);
      while (exp.size() > 1 && exp[0] == '0') exp.erase(0, 1);
      s = s.substr(0, e + 1) + (neg ? "-" : "") + exp;
    }
    return s;
  }
  std::snprintf(buf, sizeof(buf), "%.3f", p);
  return buf;
}

}  // namespace recidaudit
