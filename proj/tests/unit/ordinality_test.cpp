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
#include <random>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "strclean/error.hpp"
#include "strclean/ordinality.hpp"

namespace strclean {
namespace {

std::string vector_line(const std::string& token, std::size_t dim, double base) {
  std::string line = token;
  for (std::size_t i = 0; i < dim; ++i) line += ' ' + std::to_string(base + 0.01 * static_cast<double>(i));
  return line + '\n';
}

TEST(Embeddings, ParseAndDimensions) {
  std::istringstream in(vector_line("good", 50, 0.1) + vector_line("bad", 50, -0.2));
  const EmbeddingStore store = EmbeddingStore::parse(in);
  EXPECT_EQ(store.size(), 2u);
  EXPECT_EQ(store.dimension(), 50u);
  std::istringstream ragged(vector_line("good", 50, 0.1) + vector_line("bad", 49, 0.1));
  EXPECT_THROW(EmbeddingStore::parse(ragged), DimensionMismatch);
}

TEST(Embeddings, FallbackIsStable) {
  const EmbeddingStore a(50, 3);
  const EmbeddingStore b(50, 3);
  EXPECT_EQ(a.vector("zebra"), a.vector("zebra"));
  EXPECT_EQ(a.vector("zebra"), b.vector("zebra"));
  EXPECT_NE(a.vector("zebra"), EmbeddingStore(50, 4).vector("zebra"));
  for (double v : a.vector("zebra")) {
    EXPECT_GE(v, -1.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(Dispersion, DegenerateInputs) {
  EmbeddingStore store(3);
  store.add("x", {1, 2, 3});
  EXPECT_EQ(embedding_dispersion({"x", "x"}, store), 0.0);
  EXPECT_EQ(embedding_dispersion({"x"}, store), 0.0);
}

TEST(Dispersion, TwoPointOracle) {
  EmbeddingStore store(3);
  const std::vector<double> e1 = {1.0, -2.0, 0.5};
  const std::vector<double> e2 = {3.0, 4.0, 0.5};
  store.add("p", e1);
  store.add("q", e2);
  double expected = 0;
  for (std::size_t d = 0; d < 3; ++d) {
    const double m = (e1[d] + e2[d]) / 2;
    expected += ((e1[d] - m) * (e1[d] - m) + (e2[d] - m) * (e2[d] - m)) / 2;
  }
  expected /= 3;
  EXPECT_NEAR(embedding_dispersion({"p", "q"}, store), expected, 1e-12);
}

TEST(Dispersion, MultiWordEntriesAverage) {
  EmbeddingStore store(1);
  store.add("a", {0.0});
  store.add("b", {2.0});
  store.add("c", {4.0});
  // "a b" embeds at 1, "c" at 4: population variance 2.25.
  EXPECT_NEAR(embedding_dispersion({"a b", "c"}, store), 2.25, 1e-12);
}

TEST(Features, Examples) {
  Column c{"grade", {}};
  for (int i = 0; i < 100; ++i) c.cells.push_back(Cell::text(std::string(1, static_cast<char>('A' + i % 5))));
  const OrdinalityFeatures f = extract_features(c, c.name, EmbeddingStore(), KeywordConfig::builtin());
  EXPECT_EQ(f.n_unique, 5u);
  EXPECT_DOUBLE_EQ(f.unique_ratio, 0.05);
  EXPECT_TRUE(f.name_is_ordinal);
  EXPECT_TRUE(share_common_substring({"disagree", "agree", "wholeheartedly agree"}, 4, 0.6));
  EXPECT_FALSE(share_common_substring({"red", "green", "blue"}, 4, 0.6));
}

TEST(Features, NameMatching) {
  EXPECT_TRUE(name_matches("Customer_Rating", {"rating"}));
  EXPECT_TRUE(name_matches("age", {"stage"}));
  EXPECT_FALSE(name_matches("id", {"grid"}));
}

std::vector<LabeledFeatures> separable(std::size_t n) {
  std::vector<LabeledFeatures> data;
  for (std::size_t i = 0; i < n; ++i) {
    LabeledFeatures lf;
    lf.features.unique_ratio = static_cast<double>(i) / static_cast<double>(n);
    lf.label = i < n / 2 ? StatType::Ordinal : StatType::Nominal;
    data.push_back(lf);
  }
  return data;
}

TEST(Gbc, FitsSeparableData) {
  const auto data = separable(40);
  const GbcModel model = train_gbc(data);
  for (const auto& d : data) {
    const StatTypePrediction p = predict_stat_type(model, d.features);
    EXPECT_EQ(p.label, d.label);
    EXPECT_GT(p.probability, 0.0);
    EXPECT_LT(p.probability, 1.0);
  }
  for (const auto& tree : model.trees())
    for (const auto& node : tree.nodes) {
      if (node.feature >= 0) {
        EXPECT_LT(node.feature, static_cast<int>(kOrdinalityFeatureCount));
      }
    }
}

TEST(Gbc, TrainingLossNonIncreasing) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u;
  std::vector<FeatureVector> x;
  std::vector<int> y;
  for (int i = 0; i < 120; ++i) {
    FeatureVector v{};
    for (double& f : v) f = u(rng);
    x.push_back(v);
    y.push_back(v[0] + 0.3 * v[3] + 0.2 * u(rng) > 0.7 ? 1 : 0);
  }
  const GbcModel model = train_gbc(x, y);
  const auto& loss = model.training_loss();
  ASSERT_EQ(loss.size(), 101u);
  for (std::size_t i = 1; i < loss.size(); ++i) EXPECT_LE(loss[i], loss[i - 1] + 1e-12);
}

TEST(Gbc, SingleClassThrows) {
  std::vector<FeatureVector> x(3);
  std::vector<int> y = {1, 1, 1};
  EXPECT_THROW(train_gbc(x, y), DegenerateLabels);
}

TEST(Gbc, ZeroTreeModelPredictsPrior) {
  const double prior = 0.7;
  const GbcModel model(std::log(prior / (1 - prior)), 0.1, {});
  const StatTypePrediction p = predict_stat_type(model, OrdinalityFeatures{});
  EXPECT_EQ(p.label, StatType::Ordinal);
  EXPECT_NEAR(p.probability, prior, 1e-12);
}

TEST(Gbc, JsonRoundTrip) {
  const GbcModel model = train_gbc(separable(30));
  const GbcModel back = GbcModel::from_json(model.to_json());
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-1, 2);
  for (int i = 0; i < 100; ++i) {
    FeatureVector v{};
    for (double& f : v) f = u(rng);
    EXPECT_EQ(back.predict_proba(v), model.predict_proba(v));
  }
  const GbcModel empty(0.25, 0.1, {});
  EXPECT_EQ(GbcModel::from_json(empty.to_json()).base_score(), 0.25);
  EXPECT_THROW(GbcModel::from_json(nlohmann::json{{"trees", 3}}), SchemaError);
}

}  // namespace
}  // namespace strclean
