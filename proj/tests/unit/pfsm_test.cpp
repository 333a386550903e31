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
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "strclean/error.hpp"
#include "strclean/pfsm.hpp"

namespace strclean {
namespace {

const Registry& registry() {
  static const Registry r = build_registry();
  return r;
}

Column text_column(const std::vector<std::string>& values) {
  Column c{"c", {}};
  for (const auto& v : values) c.cells.push_back(Cell::text(v));
  return c;
}

TEST(Registry, DefaultOrderAndToggles) {
  ASSERT_EQ(registry().size(), 13u);
  for (std::size_t i = 0; i < kFeatureKinds.size(); ++i) EXPECT_EQ(registry().machines()[i].kind(), kFeatureKinds[i]);
  EXPECT_EQ(build_registry(MachineToggles{}.disable(StringFeatureKind::ZipCode)).size(), 12u);
}

TEST(Registry, EmissionWeightsNormalized) {
  for (const auto& m : registry().machines())
    for (const auto& state : m.states()) {
      if (state.transitions.empty()) continue;
      double total = 0;
      for (const auto& t : state.transitions) total += t.weight;
      EXPECT_NEAR(total, 1.0, 1e-9) << kind_name(m.kind());
    }
}

TEST(Registry, TransitionsDeterministic) {
  for (const auto& m : registry().machines())
    for (const auto& state : m.states()) {
      SymbolSet seen;
      for (const auto& t : state.transitions) {
        EXPECT_TRUE((seen & t.symbols).none()) << kind_name(m.kind());
        seen |= t.symbols;
      }
    }
}

TEST(Registry, JsonRoundTrip) {
  const Registry back = Registry::from_json(registry().to_json());
  ASSERT_EQ(back.size(), registry().size());
  for (const char* v : {"Monday", "a@b.com", "SW1A 1AA", "hello"})
    for (std::size_t i = 0; i < back.size(); ++i)
      EXPECT_EQ(back.machines()[i].logprob(v), registry().machines()[i].logprob(v));
}

// Each canonical example is accepted by its own machine and no other special one.
TEST(Machines, AcceptanceSoundness) {
  const std::map<StringFeatureKind, std::vector<std::string>> examples = {
      {StringFeatureKind::Coordinate, {"N29.10.56 W90.00.00", "29°10'56.22\"N", "N29:10:56"}},
      {StringFeatureKind::Day, {"Monday", "Mon", "Mo"}},
      {StringFeatureKind::Email, {"john.smith@example.com", "a_b@tue.nl"}},
      {StringFeatureKind::Filepath, {"C:/Users/a/x.png", "/data/1/report.txt"}},
      {StringFeatureKind::Month, {"January", "January '00", "1 January"}},
      {StringFeatureKind::NumericalString, {">10", "100 to 200", "Less than 100"}},
      {StringFeatureKind::Sentence, {"This wine has ripe fruit aromas and spice."}},
      {StringFeatureKind::Url, {"https://www.example.com/a", "http://x.org"}},
      {StringFeatureKind::ZipCode, {"SW1A 1AA", "1012 AB"}},
  };
  for (const auto& [kind, values] : examples)
    for (const auto& v : values)
      for (StringFeatureKind other : kFeatureKinds)
        EXPECT_EQ(registry().find(other)->accepts(v), other == kind)
            << v << " under " << kind_name(other);
}

TEST(Machines, RejectionExamples) {
  EXPECT_TRUE(std::isfinite(registry().find(StringFeatureKind::Day)->logprob("Monday")));
  EXPECT_EQ(registry().find(StringFeatureKind::Email)->logprob("#@*%#$@hotmail.com"),
            -std::numeric_limits<double>::infinity());
  EXPECT_EQ(registry().find(StringFeatureKind::Sentence)->logprob("one two three four five"),
            -std::numeric_limits<double>::infinity());
}

TEST(Machines, CompileRejectsBadPattern) {
  EXPECT_THROW(MachineSpec::compile(StringFeatureKind::Day, "(ab", true), InvalidSpec);
}

TEST(Machines, LogprobFollowsUniformEmissions) {
  const MachineSpec m = MachineSpec::compile(StringFeatureKind::Day, "[ab]c?", true);
  EXPECT_NEAR(m.logprob("a"), std::log(0.5), 1e-12);
  EXPECT_NEAR(m.logprob("bc"), std::log(0.5), 1e-12);
  EXPECT_FALSE(m.accepts("c"));
  EXPECT_FALSE(m.accepts("acc"));
}

TEST(InferColumn, PureIntegers) {
  Column c{"n", {Cell::integer(1), Cell::integer(2), Cell::integer(3)}};
  const ColumnProfile p = infer_column(c, registry());
  EXPECT_EQ(p.winner, StringFeatureKind::BaseInteger);
  EXPECT_TRUE(p.anomaly_rows.empty());
}

TEST(InferColumn, Days) {
  EXPECT_EQ(infer_column(text_column({"Mon", "Tue", "Wed", "Thu", "Fri"}), registry()).winner,
            StringFeatureKind::Day);
}

TEST(InferColumn, EmailWithOneInteger) {
  Column c{"contact", {}};
  for (int i = 0; i < 99; ++i) c.cells.push_back(Cell::text("user" + std::to_string(i) + "@example.com"));
  c.cells.insert(c.cells.begin() + 40, Cell::integer(12345));
  const ColumnProfile p = infer_column(c, registry());
  EXPECT_EQ(p.winner, StringFeatureKind::Email);
  EXPECT_EQ(p.anomaly_rows, std::vector<std::size_t>{40});
  EXPECT_EQ(detect_outlier_rows(p, c), std::vector<std::size_t>{40});
}

TEST(InferColumn, StandardTextHasNoAnomalies) {
  const Column c = text_column({"red", "green", "blue", "green"});
  const ColumnProfile p = infer_column(c, registry());
  EXPECT_EQ(p.winner, StringFeatureKind::Standard);
  EXPECT_TRUE(detect_outlier_rows(p, c).empty());
}

TEST(InferColumn, PosteriorNormalizedAndDisjointRows) {
  Column c = text_column({"Monday", "Tuesday", "banana", "Friday"});
  c.cells.push_back(Cell::missing());
  const ColumnProfile p = infer_column(c, registry());
  double total = 0;
  for (const auto& [kind, prob] : p.posterior) total += prob;
  EXPECT_NEAR(total, 1.0, 1e-9);
  for (std::size_t r : p.anomaly_rows)
    EXPECT_EQ(std::count(p.missing_rows.begin(), p.missing_rows.end(), r), 0);
  EXPECT_EQ(p.missing_rows, std::vector<std::size_t>{4});
}

TEST(InferColumn, MonotoneEvidence) {
  Column c = text_column({"Mon", "Tue", "Wed", "holiday"});
  double previous = infer_column(c, registry()).posterior.at(StringFeatureKind::Day);
  for (const char* extra : {"Thu", "Fri", "Saturday", "Su"}) {
    c.cells.push_back(Cell::text(extra));
    const double now = infer_column(c, registry()).posterior.at(StringFeatureKind::Day);
    EXPECT_GE(now, previous - 1e-12);
    previous = now;
  }
}

TEST(InferColumn, EmptyColumnThrows) {
  Column c{"c", {Cell::missing(), Cell::missing()}};
  EXPECT_THROW(infer_column(c, registry()), EmptyColumn);
}

}  // namespace
}  // namespace strclean
