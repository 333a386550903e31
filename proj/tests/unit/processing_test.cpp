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
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "strclean/error.hpp"
#include "strclean/geo.hpp"
#include "strclean/processing.hpp"

namespace strclean {
namespace {

Column text_column(const std::vector<std::string>& values) {
  Column c{"c", {}};
  for (const auto& v : values) c.cells.push_back(Cell::text(v));
  return c;
}

std::vector<std::string> texts(const Column& c) {
  std::vector<std::string> out;
  for (const auto& cell : c.cells) out.push_back(cell.to_string());
  return out;
}

TEST(Dms, Examples) {
  EXPECT_NEAR(dms_to_decimal(29, 10, 56.22, Cardinal::N), 29.0 + 10.0 / 60.0 + 56.22 / 3600.0, 1e-12);
  EXPECT_DOUBLE_EQ(dms_to_decimal(90, 0, 0, Cardinal::W), -90.0);
  EXPECT_DOUBLE_EQ(dms_to_decimal(0, 0, 0, Cardinal::N), 0.0);
  EXPECT_THROW(dms_to_decimal(10, 60, 0, Cardinal::N), OutOfRange);
  EXPECT_THROW(dms_to_decimal(91, 0, 0, Cardinal::S), OutOfRange);
}

TEST(ParseCoordinate, Formats) {
  const auto pair = parse_coordinate("N29.10.56 W90.00.00");
  ASSERT_EQ(pair.size(), 2u);
  EXPECT_EQ(pair[0].direction, Cardinal::N);
  EXPECT_EQ(pair[1].direction, Cardinal::W);
  EXPECT_DOUBLE_EQ(pair[1].degrees, 90.0);
  const auto single = parse_coordinate("29°10'56.22\"N");
  ASSERT_EQ(single.size(), 1u);
  EXPECT_DOUBLE_EQ(single[0].seconds, 56.22);
  EXPECT_THROW(parse_coordinate("nowhere"), ParseFailure);
}

TEST(ProcessCoordinate, PairProducesEcef) {
  const ProcessedColumns out = process_coordinate(text_column({"N29.10.56 W90.00.00", "N0.00.00 E0.00.00"}));
  ASSERT_EQ(out.outputs.size(), 5u);
  EXPECT_NEAR(out.outputs[0].column.cells[0].as_number(), 29.0 + 10.0 / 60.0 + 56.0 / 3600.0, 1e-12);
  EXPECT_DOUBLE_EQ(out.outputs[1].column.cells[0].as_number(), -90.0);
  EXPECT_NEAR(out.outputs[2].column.cells[1].as_number(), 6378137.0, 1e-6);
  for (const auto& o : out.outputs) EXPECT_EQ(o.directive, Directive::AlreadyNumeric);
}

TEST(ProcessCoordinate, SinglePartGivesLatitudeOnly) {
  const ProcessedColumns out = process_coordinate(text_column({"N29:10:56", "S12:00:00"}));
  ASSERT_EQ(out.outputs.size(), 1u);
  EXPECT_EQ(out.outputs[0].column.name, "c_lat");
  EXPECT_DOUBLE_EQ(out.outputs[0].column.cells[1].as_number(), -12.0);
}

TEST(ProcessDay, TwoLetterCodes) {
  const auto out = process_day(text_column({"Monday", "thursday", "Fr"}));
  EXPECT_EQ(texts(out.outputs[0].column), (std::vector<std::string>{"Mo", "Th", "Fr"}));
}

TEST(Affixes, EmailSuffix) {
  const auto out = process_email(text_column({"a.smith@tue.nl", "b.jones@tue.nl"}));
  EXPECT_EQ(texts(out.outputs[0].column), (std::vector<std::string>{"asmith", "bjones"}));
}

TEST(Affixes, FilepathBothSides) {
  const auto out = process_filepath(text_column({"C:/Users/a/x.png", "C:/Users/b/x.png"}));
  EXPECT_EQ(texts(out.outputs[0].column), (std::vector<std::string>{"a", "b"}));
  const auto dirs = process_filepath(text_column({"/data/1/", "/data/2/"}));
  EXPECT_EQ(texts(dirs.outputs[0].column), (std::vector<std::string>{"1", "2"}));
}

TEST(Affixes, UrlBothSides) {
  const auto out = process_url(text_column({"https://x.com/a", "https://x.com/b"}));
  EXPECT_EQ(texts(out.outputs[0].column), (std::vector<std::string>{"a", "b"}));
}

TEST(Affixes, NoSharedAffixOrSingleValue) {
  const auto mails = process_email(text_column({"a@x.org", "b@y.com"}));
  EXPECT_EQ(texts(mails.outputs[0].column), (std::vector<std::string>{"axorg", "bycom"}));
  const auto single = strip_common_affixes(text_column({"a-b", "a-b"}), true, true);
  EXPECT_EQ(texts(single), (std::vector<std::string>{"ab", "ab"}));
}

TEST(Month, Dates) {
  EXPECT_EQ(parse_month("January 1 2000").yyyymmdd(), 20000101);
  EXPECT_EQ(parse_month("Apr").yyyymmdd(), 400);
  EXPECT_EQ(parse_month("January '00").yyyymmdd(), 20000100);
  EXPECT_EQ(parse_month("Dec '95").yyyymmdd(), 19951200);
  EXPECT_THROW(parse_month("Smarch"), ParseFailure);
}

TEST(Numerical, RangesAndComparatives) {
  EXPECT_EQ(parse_range("100 to 200"), (std::pair<double, double>{100, 200}));
  EXPECT_EQ(parse_range("18_24"), (std::pair<double, double>{18, 24}));
  EXPECT_FALSE(parse_range(">10"));
  const auto nums = extract_numbers("Less than 1,000 or 2.5");
  ASSERT_EQ(nums.size(), 2u);
  EXPECT_DOUBLE_EQ(nums[0].value, 1000.0);
  EXPECT_DOUBLE_EQ(nums[1].value, 2.5);
}

TEST(Numerical, ProcessColumn) {
  const auto ranges = process_numerical(text_column({"100 to 200", "10-20", "5_7"}));
  ASSERT_EQ(ranges.outputs.size(), 1u);
  EXPECT_DOUBLE_EQ(ranges.outputs[0].column.cells[0].as_number(), 150.0);
  const auto singles = process_numerical(text_column({">10", "Less than 100", "$5"}));
  ASSERT_EQ(singles.outputs.size(), 1u);
  EXPECT_DOUBLE_EQ(singles.outputs[0].column.cells[0].as_number(), 10.0);
  EXPECT_DOUBLE_EQ(singles.outputs[0].column.cells[1].as_number(), 100.0);
}

TEST(Sentence, NounReduction) {
  const NounFilter filter({"wine", "fruit", "aromas"}, {"this", "has", "the", "a", "of"});
  EXPECT_EQ(filter.reduce("This wine has ripe fruit aromas"), "wine fruit aromas");
  bool fallback = false;
  EXPECT_EQ(filter.reduce("this has ripe", &fallback), "ripe");
  EXPECT_TRUE(fallback);
}

TEST(Zip, ShapeWithAndWithoutTable) {
  std::istringstream in("GB\tAB1 2CD\t57.1\t-2.1\n");
  const GeoTable geo = GeoTable::parse(in);
  const auto out = process_zip(text_column({"AB1 2CD", "QQ1 1QQ"}), &geo);
  ASSERT_EQ(out.outputs.size(), 7u);
  EXPECT_DOUBLE_EQ(out.outputs[1].column.cells[0].as_number(), 57.1);
  EXPECT_TRUE(out.outputs[1].column.cells[1].is_missing());
  EXPECT_EQ(process_zip(text_column({"AB1 2CD"}), nullptr).outputs.size(), 1u);
}

}  // namespace
}  // namespace strclean
