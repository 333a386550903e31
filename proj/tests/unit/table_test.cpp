// Copyright 2026 The strclean Authors.
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

#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "strclean/error.hpp"
#include "strclean/table.hpp"
#include "strclean/text.hpp"

namespace strclean {
namespace {

const auto& tokens = default_missing_tokens();

TEST(ParseField, IntegerLiteral) { EXPECT_EQ(parse_field("42", tokens), Cell::integer(42)); }

TEST(ParseField, MissingToken) {
  EXPECT_TRUE(parse_field("N/A", tokens).is_missing());
  EXPECT_TRUE(parse_field("", tokens).is_missing());
  EXPECT_TRUE(parse_field("na", tokens).is_missing());
}

TEST(ParseField, NumericalStringStaysText) { EXPECT_EQ(parse_field(">10", tokens), Cell::text(">10")); }

TEST(ParseField, FloatLiteral) { EXPECT_EQ(parse_field("1.5", tokens), Cell::number(1.5)); }

TEST(Cell, DegenerateInputsCollapseToMissing) {
  EXPECT_TRUE(Cell::text("").is_missing());
  EXPECT_TRUE(Cell::number(std::numeric_limits<double>::quiet_NaN()).is_missing());
}

TEST(Cell, CanonicalStrings) {
  EXPECT_EQ(Cell::integer(42).to_string(), "42");
  EXPECT_EQ(Cell::number(1.5).to_string(), "1.5");
  EXPECT_EQ(Cell::missing().to_string(), "");
}

TEST(FormatDouble, RoundTrips) {
  for (double d : {0.1, 1.0 / 3.0, 1e-300, 123456789.125, -2.5e17}) EXPECT_EQ(std::stod(format_double(d)), d);
}

TEST(Table, RejectsRaggedAndDuplicateColumns) {
  Table t;
  t.add_column({"a", {Cell::integer(1), Cell::integer(2)}});
  EXPECT_EQ(t.n_rows(), 2u);
  EXPECT_THROW(t.add_column({"b", {Cell::integer(1)}}), Error);
  EXPECT_THROW(t.add_column({"a", {Cell::integer(1), Cell::integer(2)}}), Error);
  EXPECT_EQ(t.unique_name("a"), "a_2");
  EXPECT_EQ(t.unique_name("c"), "c");
}

TEST(ReadDelimited, QuotedFieldsAndTypes) {
  std::istringstream in("id,name,score\n1,\"Smith, J\",2.5\n2,\"42\",NA\n");
  const Table t = read_delimited(in);
  ASSERT_EQ(t.n_cols(), 3u);
  ASSERT_EQ(t.n_rows(), 2u);
  EXPECT_EQ(t.column(1).cells[0], Cell::text("Smith, J"));
  EXPECT_EQ(t.column(1).cells[1], Cell::text("42"));
  EXPECT_EQ(t.column(2).cells[0], Cell::number(2.5));
  EXPECT_TRUE(t.column(2).cells[1].is_missing());
}

TEST(ReadDelimited, RaggedRowThrows) {
  std::istringstream in("a,b\n1,2\n3\n");
  EXPECT_THROW(read_delimited(in), RaggedRows);
}

TEST(ReadDelimited, RepairsInvalidUtf8) {
  std::istringstream in("a\nab\xff\n");
  ReadStats stats;
  const Table t = read_delimited(in, {}, &stats);
  EXPECT_EQ(stats.repaired_fields, 1u);
  EXPECT_EQ(t.column(0).cells[0], Cell::text("ab\xEF\xBF\xBD"));
}

TEST(WriteDelimited, EmptyTable) {
  std::ostringstream out;
  write_delimited(Table{}, out);
  EXPECT_TRUE(out.str().empty() || out.str() == "\n");
}

TEST(WriteDelimited, RoundTripPreservesCells) {
  Table t;
  t.add_column({"n", {Cell::integer(42), Cell::number(1.5), Cell::missing()}});
  t.add_column({"s", {Cell::text("a,b"), Cell::text("say \"hi\""), Cell::text("x")}});
  std::ostringstream out;
  write_delimited(t, out);
  std::istringstream in(out.str());
  const Table back = read_delimited(in);
  EXPECT_EQ(back.column(0), t.column(0));
  EXPECT_EQ(back.column(1), t.column(1));
}

}  // namespace
}  // namespace strclean
