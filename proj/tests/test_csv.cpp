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

#include <sstream>

#include <doctest.h>

#include "recidaudit/csv.hpp"

using namespace recidaudit;

TEST_CASE("plain rows and header lookup") {
  const CsvTable t = parse_csv("a,b,c\n1,2,3\n4,5,6\n");
  CHECK(t.header == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][1] == "2");
  CHECK(*t.column_index("c") == 2);
  CHECK(!t.column_index("missing"));
}

TEST_CASE("quoted fields with embedded separators and quotes") {
  const CsvTable t = parse_csv("name,note\n\"smith, jo\",\"said \"\"hi\"\"\"\n");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][0] == "smith, jo");
  CHECK(t.rows[0][1] == "said \"hi\"");
}

TEST_CASE("quoted newline stays inside the field") {
  const CsvTable t = parse_csv("a,b\n\"x\ny\",z\n");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][0] == "x\ny");
}

TEST_CASE("crlf endings and missing trailing newline") {
  const CsvTable t = parse_csv("a,b\r\n1,2\r\n3,4");
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[1][1] == "4");
}

TEST_CASE("short rows are padded") {
  const CsvTable t = parse_csv("a,b,c\n1,2\n");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][2] == "");
}

TEST_CASE("duplicate header names resolve to the first occurrence") {
  const CsvTable t = parse_csv("id,score,score\n7,first,second\n");
  CHECK(*t.column_index("score") == 1);
  CHECK(t.rows[0][*t.column_index("score")] == "first");
}

TEST_CASE("utf-8 byte-order mark is stripped") {
  const CsvTable t = parse_csv("\xEF\xBB\xBFid,x\n1,2\n");
  CHECK(t.header[0] == "id");
}

TEST_CASE("unterminated quote is an error") {
  CHECK_THROWS(parse_csv("a,b\n\"oops,2\n"));
}

TEST_CASE("empty input is an error") { CHECK_THROWS(parse_csv("")); }

TEST_CASE("write_csv_row round trips through the parser") {
  std::ostringstream out;
  write_csv_row(out, {"plain", "with,comma", "with\"quote", "multi\nline", ""});
  const CsvTable t = parse_csv("c1,c2,c3,c4,c5\n" + out.str());
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][0] == "plain");
  CHECK(t.rows[0][1] == "with,comma");
  CHECK(t.rows[0][2] == "with\"quote");
  CHECK(t.rows[0][3] == "multi\nline");
  CHECK(t.rows[0][4] == "");
}
