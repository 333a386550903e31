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

#include <atomic>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "strclean/error.hpp"
#include "strclean/pipeline.hpp"

namespace strclean {
namespace {

PipelineConfig test_config() {
  PipelineConfig config;
  config.paths.data_dir = STRCLEAN_TEST_DATA_DIR;
  return config;
}

const Resources& resources() {
  static const Resources r = Resources::load(test_config());
  return r;
}

Table read(const std::string& csv) {
  std::istringstream in(csv);
  return read_delimited(in);
}

std::string matrix_csv(const EncodedMatrix& m) {
  std::ostringstream out;
  write_matrix(m, out);
  return out.str();
}

TEST(Config, RejectsUnknownKeysAndBadTypes) {
  EXPECT_THROW(PipelineConfig::from_json({{"sed", 3}}), ConfigError);
  EXPECT_THROW(PipelineConfig::from_json({{"seed", "seven"}}), ConfigError);
  EXPECT_THROW(PipelineConfig::from_json({{"encoder_overrides", {{"city", "Nope"}}}}), ConfigError);
}

TEST(Config, JsonRoundTrip) {
  PipelineConfig config = test_config();
  config.seed = 7;
  config.minhash_k = 32;
  config.encoder_overrides["city"] = EncoderId::MinHash;
  const PipelineConfig back = PipelineConfig::from_json(config.to_json());
  EXPECT_EQ(back.seed, 7u);
  EXPECT_EQ(back.minhash_k, 32u);
  EXPECT_EQ(back.encoder_overrides.at("city"), EncoderId::MinHash);
  EXPECT_EQ(back.to_json(), config.to_json());
}

TEST(Resources, BundledFilesLoad) {
  EXPECT_TRUE(resources().geo.has_value());
  EXPECT_TRUE(resources().lexicon.has_value());
  EXPECT_TRUE(resources().model.has_value());
}

TEST(Pipeline, AllNumericIsNoOp) {
  const Table input = read("a,b\n1,2.5\n3,4.5\n");
  const PipelineResult r = run_pipeline(input, test_config(), resources());
  ASSERT_TRUE(r.matrix);
  ASSERT_EQ(r.matrix->n_cols(), 2u);
  EXPECT_EQ(r.matrix->at(1, 0), 3.0);
  EXPECT_EQ(r.matrix->at(0, 1), 2.5);
  EXPECT_EQ(r.report.string_columns(), 0u);
}

TEST(Pipeline, DayColumnBecomesNumeric) {
  const Table input = read("day,n\nMonday,1\nTue,2\nWednesday,3\nThu,4\nFriday,5\nMon,6\n");
  const PipelineResult r = run_pipeline(input, test_config(), resources());
  ASSERT_TRUE(r.matrix);
  EXPECT_FALSE(r.matrix->has_nan());
  EXPECT_EQ(r.matrix->n_rows, 6u);
  EXPECT_EQ(r.report.columns.size(), 2u);
  EXPECT_EQ(r.report.columns[0].profile.winner, StringFeatureKind::Day);
}

TEST(Pipeline, ZipWithoutEncodingKeepsText) {
  PipelineConfig config = test_config();
  config.encode = false;
  const Table input = read("postcode\nSW1A 1AA\nM5V 2T6\n1012 AB\nSW1A 1AA\n");
  const PipelineResult r = run_pipeline(input, config, resources());
  EXPECT_FALSE(r.matrix);
  ASSERT_GE(r.processed.n_cols(), 7u);
  EXPECT_EQ(r.processed.column(0).cells[0], Cell::text("SW1A 1AA"));
  EXPECT_NE(r.processed.find("postcode_lat"), nullptr);
  EXPECT_NE(r.processed.find("postcode_country"), nullptr);
}

TEST(Pipeline, DeterministicAcrossThreadCounts) {
  std::string csv = "city,score,when\n";
  const std::vector<std::string> cities = {"Amsterdam", "Rotterdam", "Utrecht", "Amsterdm", "Breda"};
  for (int i = 0; i < 60; ++i)
    csv += cities[static_cast<std::size_t>(i % 5 == 3 && i > 10 ? 0 : i % 5)] + ',' + (i % 7 == 0 ? "" : std::to_string(i)) +
           ",Jan " + std::to_string(2000 + i % 20) + '\n';
  const Table input = read(csv);
  PipelineConfig one = test_config();
  one.threads = 1;
  PipelineConfig four = test_config();
  four.threads = 4;
  const PipelineResult a = run_pipeline(input, one, resources());
  const PipelineResult b = run_pipeline(input, four, resources());
  const PipelineResult c = run_pipeline(input, one, resources());
  EXPECT_EQ(matrix_csv(*a.matrix), matrix_csv(*b.matrix));
  EXPECT_EQ(matrix_csv(*a.matrix), matrix_csv(*c.matrix));
  EXPECT_EQ(a.report.repairs.to_json(), b.report.repairs.to_json());
}

TEST(Pipeline, EveryInputColumnReported) {
  const Table input = read("a,b,c\nx,1,hello there\ny,2,\nz,3,hi\n");
  const RunReport report = infer_table(input, test_config(), resources());
  ASSERT_EQ(report.columns.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(report.columns[i].name, input.column(i).name);
  const nlohmann::json j = report.to_json();
  EXPECT_EQ(j["schema"], "strclean-run-report");
  EXPECT_EQ(j["n_columns"], 3);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

}  // namespace
}  // namespace strclean
