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
// Test-only oracles, deliberately independent of the library code paths
// they check: a hand-written civil-date formula, a brute-force survival
// estimate, and an adaptive-Simpson tail integral.

#ifndef RECIDAUDIT_TESTS_ORACLES_HPP_
#define RECIDAUDIT_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracles {

/// Days since 1970-01-01 for a civil date (classic integer algorithm,
/// written out here rather than delegating to <chrono>).
inline long days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = unsigned(y - era * 400);
  const unsigned doy = unsigned((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + long(doe) - 719468;
}

inline long days_between_civil(int y1, int m1, int d1, int y2, int m2, int d2) {
  return days_from_civil(y2, m2, d2) - days_from_civil(y1, m1, d1);
}

/// Share of subjects with event time <= t when nothing is censored —
/// the empirical CDF that the product-limit estimate must reproduce.
inline double ecdf_share(const std::vector<long>& event_times, long t) {
  long count = 0;
  for (const long e : event_times) {
    if (e <= t) count += 1;
  }
  return double(count) / double(event_times.size());
}

/// Adaptive Simpson integration.
template <typename F>
double simpson(F f, double a, double b, double eps = 1e-12, int depth = 40) {
  auto rec = [&](auto&& self, double lo, double hi, double flo, double fmid,
                 double fhi, double whole, double tol, int d) -> double {
    const double mid = (lo + hi) / 2;
    const double lmid = (lo + mid) / 2;
    const double rmid = (mid + hi) / 2;
    const double flmid = f(lmid);
    const double frmid = f(rmid);
    const double left = (mid - lo) / 6 * (flo + 4 * flmid + fmid);
    const double right = (hi - mid) / 6 * (fmid + 4 * frmid + fhi);
    if (d <= 0 || std::fabs(left + right - whole) < 15 * tol) {
      return left + right + (left + right - whole) / 15;
    }
    return self(self, lo, mid, flo, flmid, fmid, left, tol / 2, d - 1) +
           self(self, mid, hi, fmid, frmid, fhi, right, tol / 2, d - 1);
  };
  const double mid = (a + b) / 2;
  const double fa = f(a), fm = f(mid), fb = f(b);
  const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return rec(rec, a, b, fa, fm, fb, whole, eps, depth);
}

/// Upper tail of the 1-df chi-squared distribution by numerical
/// integration: with the substitution x = v^2 the density integrates to
/// 2*phi(v) over v in [sqrt(stat), inf); the improper tail uses a second
/// substitution v = sqrt(stat) + u/(1-u) over u in [0,1).
inline double chi1_tail_by_integration(double stat) {
  const double lo = std::sqrt(stat);
  auto integrand = [&](double u) {
    if (u >= 1.0) return 0.0;
    const double v = lo + u / (1.0 - u);
    const double jacobian = 1.0 / ((1.0 - u) * (1.0 - u));
    return 2.0 / std::sqrt(2.0 * M_PI) * std::exp(-v * v / 2.0) * jacobian;
  };
  return simpson(integrand, 0.0, 1.0 - 1e-9, 1e-14);
}

/// Small deterministic generator for property tests (splitmix64).
class Rand {
 public:
  explicit Rand(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long below(long n) { return long(next() % std::uint64_t(n)); }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace oracles

#endif  // RECIDAUDIT_TESTS_ORACLES_HPP_
