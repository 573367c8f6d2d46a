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

#include "recidaudit/dates.hpp"

#include <cstdio>
#include <stdexcept>

namespace recidaudit {

namespace {

bool parse_int(std::string_view s, size_t pos, size_t len, int& out) {
  if (pos + len > s.size()) return false;
  int value = 0;
  for (size_t i = pos; i < pos + len; ++i) {
    const char c = s[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

std::optional<std::chrono::year_month_day> parse_ymd(std::string_view s) {
  int y = 0, m = 0, d = 0;
  if (s.size() < 10) return std::nullopt;
  if (!parse_int(s, 0, 4, y) || s[4] != '-' || !parse_int(s, 5, 2, m) ||
      s[7] != '-' || !parse_int(s, 8, 2, d)) {
    return std::nullopt;
  }
  const std::chrono::year_month_day ymd{std::chrono::year{y},
                                        std::chrono::month{unsigned(m)},
                                        std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) return std::nullopt;
  return ymd;
}

}  // namespace

Date make_date(int year, unsigned month, unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{month},
                                        std::chrono::day{day}};
  if (!ymd.ok()) {
    throw std::domain_error("invalid calendar date " + std::to_string(year) +
                            "-" + std::to_string(month) + "-" +
                            std::to_string(day));
  }
  return std::chrono::sys_days{ymd};
}

std::optional<Date> parse_date(std::string_view text) {
  if (text.size() != 10) return std::nullopt;
  const auto ymd = parse_ymd(text);
  if (!ymd) return std::nullopt;
  return std::chrono::sys_days{*ymd};
}

std::optional<DateTime> parse_datetime(std::string_view text) {
  const auto ymd = parse_ymd(text);
  if (!ymd) return std::nullopt;
  const DateTime midnight = std::chrono::sys_days{*ymd};
  if (text.size() == 10) return midnight;
  // "YYYY-MM-DD HH:MM:SS"
  if (text.size() != 19 || text[10] != ' ') return std::nullopt;
  int h = 0, mi = 0, se = 0;
  if (!parse_int(text, 11, 2, h) || text[13] != ':' ||
      !parse_int(text, 14, 2, mi) || text[16] != ':' ||
      !parse_int(text, 17, 2, se)) {
    return std::nullopt;
  }
  if (h > 23 || mi > 59 || se > 60) return std::nullopt;
  return midnight + std::chrono::hours{h} + std::chrono::minutes{mi} +
         std::chrono::seconds{se};
}

std::string format_date(Date d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return buf;
}

std::string format_datetime(DateTime t) {
  const Date day = std::chrono::floor<std::chrono::days>(t);
  const auto tod = std::chrono::hh_mm_ss{t - day};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s %02ld:%02ld:%02ld",
                format_date(day).c_str(), long(tod.hours().count()),
                long(tod.minutes().count()), long(tod.seconds().count()));
  return buf;
}

YearQuarter year_quarter_of(Date d) {
  const std::chrono::year_month_day ymd{d};
  return YearQuarter{int(ymd.year()), int((unsigned(ymd.month()) - 1) / 3 + 1)};
}

std::string to_string(YearQuarter q) {
  return std::to_string(q.year) + "." + std::to_string(q.quarter);
}

}  // namespace recidaudit
