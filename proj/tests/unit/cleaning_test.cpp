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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "strclean/cleaning.hpp"

namespace strclean {
namespace {

// Full-matrix edit distance used as an oracle.
std::size_t edit_distance_oracle(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return d[a.size()][b.size()];
}

Column repeated(const std::vector<std::pair<std::string, int>>& counts) {
  Column c{"c", {}};
  for (const auto& [value, n] : counts)
    for (int i = 0; i < n; ++i) c.cells.push_back(Cell::text(value));
  return c;
}

TEST(Levenshtein, Examples) {
  EXPECT_EQ(levenshtein("agree", "agree"), 0u);
  EXPECT_EQ(levenshtein("agree", "agre"), 1u);
  EXPECT_EQ(levenshtein("", "abc"), 3u);
}

TEST(Levenshtein, MatchesOracleOnRandomPairs) {
  std::mt19937 rng(11);
  auto word = [&rng] {
    std::string s(rng() % 9, 'a');
    for (char& ch : s) ch = static_cast<char>('a' + rng() % 4);
    return s;
  };
  for (int i = 0; i < 500; ++i) {
    const std::string a = word();
    const std::string b = word();
    EXPECT_EQ(levenshtein(a, b), edit_distance_oracle(a, b)) << a << " / " << b;
    EXPECT_EQ(levenshtein(a, b), levenshtein(b, a));
  }
}

TEST(CorrectTypos, RewritesDominatedVariant) {
  const Column c = repeated({{"California", 99}, {"Califronia", 1}});
  const auto [fixed, log] = correct_typos(c);
  EXPECT_EQ(fixed.cells[99], Cell::text("California"));
  ASSERT_EQ(log.entries.size(), 1u);
  EXPECT_EQ(log.entries[0].action, RepairAction::TypoFixed);
  EXPECT_EQ(log.entries[0].row, 99u);
}

TEST(CorrectTypos, NoDominanceLeavesColumn) {
  const Column c = repeated({{"cat", 5}, {"car", 5}});
  EXPECT_EQ(correct_typos(c).first, c);
}

TEST(CorrectTypos, TiedCandidatesLeaveColumn) {
  const Column c = repeated({{"male", 99}, {"mole", 99}, {"mqle", 1}});
  const auto [fixed, log] = correct_typos(c);
  EXPECT_EQ(fixed, c);
  EXPECT_TRUE(log.entries.empty());
}

TEST(Impute, MeanUnderMcar) {
  Table t;
  t.add_column({"x", {Cell::integer(1), Cell::missing(), Cell::integer(3)}});
  const ImputeResult r = impute(t, MissingnessDiagnosis{});
  EXPECT_DOUBLE_EQ(r.table.column(0).cells[1].numeric_value(), 2.0);
  EXPECT_EQ(r.log.count(RepairAction::Imputed), 1u);
}

TEST(Impute, ModeUnderMcar) {
  Table t;
  t.add_column({"s", {Cell::text("a"), Cell::text("a"), Cell::text("b"), Cell::missing()}});
  EXPECT_EQ(impute(t, MissingnessDiagnosis{}).table.column(0).cells[3], Cell::text("a"));
}

TEST(Impute, ConditionalMatchesLeastSquares) {
  Table t;
  Column x{"x", {}};
  Column y{"y", {}};
  for (int i = 0; i < 20; ++i) {
    x.cells.push_back(Cell::number(0.5 * i));
    y.cells.push_back(Cell::number(3.0 * (0.5 * i) - 2.0));
  }
  y.cells[7] = Cell::missing();
  t.add_column(std::move(x));
  t.add_column(std::move(y));
  MissingnessDiagnosis mar;
  mar.mechanism = Mechanism::MAR;
  const ImputeResult r = impute(t, mar);
  EXPECT_NEAR(r.table.column(1).cells[7].numeric_value(), 3.0 * 3.5 - 2.0, 1e-6);
}

TEST(Impute, AllMissingColumnDropped) {
  Table t;
  t.add_column({"x", {Cell::integer(1), Cell::integer(2)}});
  t.add_column({"gone", {Cell::missing(), Cell::missing()}});
  const ImputeResult r = impute(t, MissingnessDiagnosis{});
  EXPECT_EQ(r.table.n_cols(), 1u);
  EXPECT_EQ(r.dropped_columns, std::vector<std::string>{"gone"});
}

TEST(LittlesTest, CompleteTableIsMcar) {
  Table t;
  t.add_column({"a", {Cell::number(1), Cell::number(2), Cell::number(4)}});
  t.add_column({"b", {Cell::number(3), Cell::number(1), Cell::number(0)}});
  const MissingnessDiagnosis d = littles_test(t);
  EXPECT_EQ(d.statistic, 0.0);
  EXPECT_EQ(d.mechanism, Mechanism::MCAR);
}

TEST(LittlesTest, OutputRangesAndDecisionRule) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    Table t;
    Column a{"a", {}};
    Column b{"b", {}};
    for (int i = 0; i < 80; ++i) {
      const double v = normal(rng);
      a.cells.push_back(Cell::number(v));
      b.cells.push_back((trial % 2 == 0 ? rng() % 5 == 0 : v > 0.5) ? Cell::missing() : Cell::number(normal(rng) + v));
    }
    t.add_column(std::move(a));
    t.add_column(std::move(b));
    const MissingnessDiagnosis d = littles_test(t);
    EXPECT_GE(d.p_value, 0.0);
    EXPECT_LE(d.p_value, 1.0);
    EXPECT_GE(d.statistic, 0.0);
    EXPECT_GE(d.dof, 0);
    EXPECT_EQ(d.mechanism == Mechanism::MCAR, d.p_value > 0.05);
  }
}

TEST(ChiSquare, KnownQuantiles) {
  EXPECT_NEAR(chi_square_sf(3.841458820694124, 1), 0.05, 1e-9);
  EXPECT_NEAR(chi_square_sf(2.0, 2), std::exp(-1.0), 1e-12);
  EXPECT_EQ(chi_square_sf(5.0, 0), 1.0);
}

TEST(RepairOutliers, LosslessParse) {
  const Registry registry = build_registry();
  Column c{"n", {Cell::integer(1), Cell::integer(5), Cell::text("12"), Cell::integer(7)}};
  for (int i = 0; i < 40; ++i) c.cells.push_back(Cell::integer(i));
  const auto profile = infer_column(c, registry);
  ASSERT_EQ(profile.winner, StringFeatureKind::BaseInteger);
  const auto [fixed, log] = repair_type_outliers(c, profile, registry);
  EXPECT_EQ(fixed.cells[2], Cell::integer(12));
  EXPECT_EQ(log.count(RepairAction::OutlierCoerced), 1u);
}

TEST(RepairOutliers, RejectedValueBlanked) {
  const Registry registry = build_registry();
  Column c{"contact", {}};
  for (int i = 0; i < 30; ++i) c.cells.push_back(Cell::text("p" + std::to_string(i) + "@mail.org"));
  c.cells[3] = Cell::integer(12345);
  const auto profile = infer_column(c, registry);
  const auto [fixed, log] = repair_type_outliers(c, profile, registry);
  EXPECT_TRUE(fixed.cells[3].is_missing());
  ASSERT_EQ(log.entries.size(), 1u);
  EXPECT_EQ(log.entries[0].old_value, Cell::integer(12345));
}

TEST(RepairOutliers, CleanColumnUnchanged) {
  const Registry registry = build_registry();
  Column c{"d", {Cell::text("Mon"), Cell::text("Tue"), Cell::text("Wed")}};
  const auto [fixed, log] = repair_type_outliers(c, infer_column(c, registry), registry);
  EXPECT_EQ(fixed, c);
  EXPECT_TRUE(log.entries.empty());
}

TEST(RepairLog, MergeKeepsOneEntryPerCell) {
  RepairLog a;
  a.entries.push_back({"c", 1, RepairAction::TypoFixed, Cell::text("x"), Cell::text("y")});
  RepairLog b;
  b.entries.push_back({"c", 1, RepairAction::Imputed, Cell::text("y"), Cell::text("z")});
  b.entries.push_back({"c", 2, RepairAction::Imputed, Cell::missing(), Cell::text("z")});
  a.merge(b);
  ASSERT_EQ(a.entries.size(), 2u);
  EXPECT_EQ(a.entries[0].action, RepairAction::TypoFixed);
  EXPECT_EQ(a.entries[0].old_value, Cell::text("x"));
  EXPECT_EQ(a.entries[0].new_value, Cell::text("z"));
}

}  // namespace
}  // namespace strclean
