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

#include "recidaudit/synth.hpp"

#include <random>
#include <stdexcept>

namespace recidaudit {

namespace {

// mt19937_64 with modulo draws: identical sequences on every platform,
// which std::uniform_int_distribution does not promise.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long below(long n) { return long(engine_() % std::uint64_t(n)); }
  long in_range(long lo, long hi) { return lo + below(hi - lo + 1); }
  bool chance(int percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

const Race kRaces[] = {Race::AfricanAmerican, Race::Caucasian, Race::Hispanic,
                       Race::Other, Race::Asian, Race::NativeAmerican};

ScoreText category_of(int decile) {
  if (decile <= 4) return ScoreText::Low;
  if (decile <= 7) return ScoreText::Medium;
  return ScoreText::High;
}

PersonRecord base_record(Rng& rng, long id, Date screen) {
  PersonRecord r;
  r.person_id = id;
  r.screen_date = screen;
  r.decile_score = int(rng.in_range(1, 10));
  r.score_text = category_of(r.decile_score);
  r.race = kRaces[rng.below(6)];
  r.sex = rng.chance(80) ? Sex::Male : Sex::Female;
  r.dob = add_days(make_date(1985, 1, 1), rng.below(5000));
  if (rng.chance(30)) {
    const DateTime in = DateTime(screen) - std::chrono::hours{rng.below(48)};
    r.custody_spans.push_back(
        CustodySpan{in, in + std::chrono::hours{rng.in_range(4, 24 * 60)}});
  }
  return r;
}

void mark_recidivist(PersonRecord& r, long days_to_offense) {
  r.is_recid = RecidFlag::Yes;
  r.recid_offense_date = add_days(r.screen_date, days_to_offense);
  r.two_year_recid = days_to_offense <= kDefaultWindowDays ? 1 : 0;
}

}  // namespace

std::vector<PersonRecord> synth_fixture(std::uint64_t seed, int n, Date cutoff,
                                        int post_cutoff_positive_excess) {
  if (n < 0 || post_cutoff_positive_excess < 0 ||
      n < post_cutoff_positive_excess) {
    throw std::domain_error("synth_fixture: need 0 <= excess <= n");
  }
  const Date series_start = make_date(2013, 1, 1);
  const Date series_end = make_date(2014, 12, 31);
  const long pre_span = days_between(series_start, cutoff);
  const long post_span = days_between(cutoff, series_end);
  if (pre_span < 0 || post_span < 1) {
    throw std::domain_error("synth_fixture: cutoff outside 2013-01-01..2014-12-30");
  }

  Rng rng(seed);
  std::vector<PersonRecord> records;
  records.reserve(size_t(n));

  const int n_pre = n - post_cutoff_positive_excess;
  for (int i = 0; i < n_pre; ++i) {
    PersonRecord r = base_record(rng, i + 1, add_days(series_start, rng.below(pre_span + 1)));
    // Roughly a third recidivate; a few of those only after the window.
    if (rng.chance(35)) {
      const bool late = rng.chance(8);
      mark_recidivist(r, late ? rng.in_range(kDefaultWindowDays + 1,
                                             kDefaultWindowDays + 120)
                              : rng.in_range(1, kDefaultWindowDays));
    } else {
      r.is_recid = RecidFlag::No;
      r.two_year_recid = 0;
    }
    records.push_back(std::move(r));
  }
  for (int i = 0; i < post_cutoff_positive_excess; ++i) {
    PersonRecord r = base_record(rng, n_pre + i + 1,
                                 add_days(cutoff, rng.in_range(1, post_span)));
    mark_recidivist(r, rng.in_range(1, kDefaultWindowDays));
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace recidaudit
