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

#ifndef RECIDAUDIT_DATES_HPP_
#define RECIDAUDIT_DATES_HPP_

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace recidaudit {

/// Calendar date at day resolution (proleptic Gregorian, UTC).
using Date = std::chrono::sys_days;

/// Timestamp at second resolution. Custody spans carry these.
using DateTime = std::chrono::sys_seconds;

/// Builds a Date from components, throwing std::domain_error on an
/// invalid calendar combination (e.g. 2014-02-30).
Date make_date(int year, unsigned month, unsigned day);

/// Parses "YYYY-MM-DD". Returns nullopt on malformed input or an
/// invalid calendar date.
std::optional<Date> parse_date(std::string_view text);

/// Parses "YYYY-MM-DD HH:MM:SS"; the time-of-day part is optional and
/// defaults to midnight.
std::optional<DateTime> parse_datetime(std::string_view text);

std::string format_date(Date d);
std::string format_datetime(DateTime t);

/// Signed whole days from a to b; negative when b precedes a.
inline long days_between(Date a, Date b) { return (b - a).count(); }

inline Date add_days(Date d, long days) { return d + std::chrono::days{days}; }

/// Calendar year-quarter bucket (quarter in 1..4).
struct YearQuarter {
  int year = 0;
  int quarter = 0;
  auto operator<=>(const YearQuarter&) const = default;
};

YearQuarter year_quarter_of(Date d);

/// "2013.1" style label matching the quarterly rate table headers.
std::string to_string(YearQuarter q);

}  // namespace recidaudit

#endif  // RECIDAUDIT_DATES_HPP_
