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

#include <doctest.h>

#include "recidaudit/dates.hpp"
#include "support/oracles.hpp"

using namespace recidaudit;

TEST_CASE("days_between spans the leap year") {
  // frozen from the civil-date oracle below
  CHECK(oracles::days_between_civil(2014, 4, 1, 2016, 4, 1) == 731);
  CHECK(days_between(make_date(2014, 4, 1), make_date(2016, 4, 1)) == 731);
}

TEST_CASE("days_between identity and reversal") {
  const Date d = make_date(2014, 4, 1);
  CHECK(days_between(d, d) == 0);
  CHECK(days_between(make_date(2014, 4, 2), make_date(2014, 4, 1)) == -1);
}

TEST_CASE("days_between antisymmetry on random dates") {
  oracles::Rand rng(7);
  const Date base = make_date(2000, 1, 1);
  for (int i = 0; i < 500; ++i) {
    const Date a = add_days(base, rng.below(12000));
    const Date b = add_days(base, rng.below(12000));
    CHECK(days_between(a, b) == -days_between(b, a));
  }
}

TEST_CASE("days_between matches the civil-date oracle") {
  oracles::Rand rng(11);
  for (int i = 0; i < 200; ++i) {
    const int y1 = 1990 + int(rng.below(50));
    const int y2 = 1990 + int(rng.below(50));
    const int m1 = 1 + int(rng.below(12));
    const int m2 = 1 + int(rng.below(12));
    const int d1 = 1 + int(rng.below(28));
    const int d2 = 1 + int(rng.below(28));
    CHECK(days_between(make_date(y1, unsigned(m1), unsigned(d1)),
                       make_date(y2, unsigned(m2), unsigned(d2))) ==
          oracles::days_between_civil(y1, m1, d1, y2, m2, d2));
  }
}

TEST_CASE("date parsing and formatting") {
  CHECK(parse_date("2014-04-01") == make_date(2014, 4, 1));
  CHECK(format_date(make_date(2014, 4, 1)) == "2014-04-01");
  CHECK(!parse_date("2014-13-01"));
  CHECK(!parse_date("2014-02-30"));
  CHECK(!parse_date("04/01/2014"));
  CHECK(!parse_date(""));
  CHECK(!parse_date("2014-04-01x"));
}

TEST_CASE("invalid make_date throws") {
  CHECK_THROWS_AS(make_date(2014, 2, 30), std::domain_error);
}

TEST_CASE("datetime parsing with optional time part") {
  const auto midnight = parse_datetime("2013-08-13");
  REQUIRE(midnight);
  CHECK(*midnight == DateTime(make_date(2013, 8, 13)));

  const auto stamped = parse_datetime("2013-08-13 06:03:42");
  REQUIRE(stamped);
  CHECK(*stamped - *midnight ==
        std::chrono::hours{6} + std::chrono::minutes{3} + std::chrono::seconds{42});
  CHECK(format_datetime(*stamped) == "2013-08-13 06:03:42");
  CHECK(!parse_datetime("2013-08-13 25:00:00"));
  CHECK(!parse_datetime("2013-08-13T06:03:42"));
}

TEST_CASE("year quarters") {
  CHECK(year_quarter_of(make_date(2013, 1, 1)) == YearQuarter{2013, 1});
  CHECK(year_quarter_of(make_date(2014, 4, 1)) == YearQuarter{2014, 2});
  CHECK(year_quarter_of(make_date(2014, 12, 31)) == YearQuarter{2014, 4});
  CHECK(to_string(YearQuarter{2013, 2}) == "2013.2");
}
