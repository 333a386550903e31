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
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "strclean/encoders.hpp"
#include "strclean/error.hpp"

namespace strclean {
namespace {

Column text_column(const std::vector<std::string>& values) {
  Column c{"c", {}};
  for (const auto& v : values) c.cells.push_back(Cell::text(v));
  return c;
}

SentimentLexicon small_lexicon() {
  std::istringstream in("good\t1.9\nbad\t-2.5\nagree\t1.5\ndisagree\t-1.6\n[boosters]\nvery\t1.5\nstrongly\t1.5\n"
                        "[negators]\nnot\n");
  return SentimentLexicon::parse(in);
}

TEST(SelectEncoder, Thresholds) {
  EXPECT_EQ(select_nominal_encoder(29), EncoderId::Similarity);
  EXPECT_EQ(select_nominal_encoder(30), EncoderId::GammaPoisson);
  EXPECT_EQ(select_nominal_encoder(99), EncoderId::GammaPoisson);
  EXPECT_EQ(select_nominal_encoder(100), EncoderId::MinHash);
  EXPECT_THROW(parse_encoder("Bogus"), ConfigError);
  EXPECT_EQ(parse_encoder(encoder_name(EncoderId::MinHash)), EncoderId::MinHash);
}

TEST(Ngrams, Padding) {
  EXPECT_EQ(ngram_set("ab"), (std::vector<std::string>{" ab", "ab "}));
  EXPECT_EQ(ngram_set(""), std::vector<std::string>{" "});
  EXPECT_EQ(ngram_set("Agree"), ngram_set("agree"));
}

TEST(Similarity, Values) {
  const Column c = text_column({"agree", "disagree", "xyz"});
  const EncodedMatrix m = similarity_encode(c, {"agree", "disagree", "xyz"});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(m.at(i, i), 1.0);
  EXPECT_EQ(m.at(2, 0), 0.0);
  EXPECT_GT(m.at(0, 1), 0.0);
  EXPECT_LT(m.at(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(m.at(0, 1), jaccard(ngram_set("agree"), ngram_set("disagree")));
}

TEST(MinHash, DuplicatesAndEstimate) {
  const Column c = text_column({"red apple", "green apple", "red apple"});
  const EncodedMatrix m = minhash_encode(c, 64, 0);
  ASSERT_EQ(m.n_cols(), 64u);
  for (std::size_t j = 0; j < 64; ++j) EXPECT_EQ(m.at(0, j), m.at(2, j));

  std::mt19937 rng(12);
  const std::vector<std::string> words = {"street", "stream", "strong", "string", "spring", "strange", "stranger"};
  for (int i = 0; i < 50; ++i) {
    const std::string a = words[rng() % words.size()] + words[rng() % words.size()];
    const std::string b = words[rng() % words.size()] + words[rng() % words.size()];
    const auto sa = minhash_signature(a, 64, 0);
    const auto sb = minhash_signature(b, 64, 0);
    double equal = 0;
    for (std::size_t j = 0; j < 64; ++j) equal += sa[j] == sb[j] ? 1 : 0;
    EXPECT_NEAR(equal / 64.0, jaccard(ngram_set(a), ngram_set(b)), 0.15) << a << " / " << b;
  }
}

TEST(MinHash, ComponentsInUnitInterval) {
  for (double v : minhash_signature("hello", 32, 5)) {
    EXPECT_GE(v, 0.0);
    EXPECT_LT(v, 1.0);
  }
  EXPECT_NE(minhash_signature("hello", 8, 5), minhash_signature("hello", 8, 6));
}

TEST(GammaPoisson, RankOneRecovery) {
  DenseMatrix v(4, 5);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 5; ++c) v(r, c) = static_cast<double>((r + 1) * (c + 2));
  const GammaPoissonFit fit = gamma_poisson_fit(v, 1, 100, 0);
  EXPECT_LE(kl_divergence(v, multiply(fit.activations, fit.loadings)), 1e-6);
}

TEST(GammaPoisson, MonotoneAndNonNegative) {
  std::mt19937_64 rng(13);
  std::poisson_distribution<int> p(1.5);
  DenseMatrix v(15, 25);
  for (double& x : v.data) x = p(rng);
  const GammaPoissonFit fit = gamma_poisson_fit(v, 4, 100, 2);
  for (std::size_t i = 1; i < fit.objective.size(); ++i)
    EXPECT_LE(fit.objective[i], fit.objective[i - 1] + 1e-10 * std::max(1.0, fit.objective[i - 1]));
  for (double x : fit.activations.data) EXPECT_GE(x, 0.0);
  for (double x : fit.loadings.data) EXPECT_GE(x, 0.0);
  for (std::size_t t = 0; t < 4; ++t) {
    double row = 0;
    for (std::size_t c = 0; c < 25; ++c) row += fit.loadings(t, c);
    EXPECT_NEAR(row, 1.0, 1e-9);
  }
  EXPECT_THROW(gamma_poisson_fit(DenseMatrix(3, 3, 0.0), 2), DegenerateInput);
}

TEST(GammaPoisson, EncodeShapeAndDeterminism) {
  std::vector<std::string> values;
  for (int i = 0; i < 40; ++i) values.push_back("item " + std::to_string(i % 35));
  const Column c = text_column(values);
  const EncodedMatrix a = gamma_poisson_encode(c, 10, 50, 1);
  const EncodedMatrix b = gamma_poisson_encode(c, 10, 50, 1);
  EXPECT_EQ(a.n_cols(), 10u);
  EXPECT_EQ(a.columns, b.columns);
  for (std::size_t j = 0; j < 10; ++j) EXPECT_EQ(a.at(0, j), a.at(35, j));
}

TEST(Sentiment, BoostersAndNegators) {
  const SentimentLexicon lex = small_lexicon();
  const double good = sentiment_intensity("good", lex);
  EXPECT_GT(good, 0.0);
  EXPECT_DOUBLE_EQ(sentiment_intensity("very good", lex), 1.5 * good);
  EXPECT_LT(sentiment_intensity("not good", lex), 0.0);
  EXPECT_EQ(sentiment_intensity("zxqv", lex), 0.0);
}

TEST(Sentiment, MalformedLexicon) {
  std::istringstream in("good\tabc\n");
  EXPECT_THROW(SentimentLexicon::parse(in), SchemaError);
}

TEST(OrdinalOrder, LexiconAndTies) {
  const SentimentLexicon lex = small_lexicon();
  const auto order = ordinal_order(text_column({"good", "very bad", "very good", "bad"}), lex);
  EXPECT_EQ(order, (std::vector<std::string>{"very bad", "bad", "good", "very good"}));
  EXPECT_EQ(ordinal_order(text_column({"q", "p", "r", "p"}), lex), (std::vector<std::string>{"q", "p", "r"}));
  const std::vector<std::string> likert = {"strongly disagree", "disagree", "neutral", "agree", "strongly agree"};
  EXPECT_EQ(spearman_rank_correlation(ordinal_order(text_column({"agree", "neutral", "strongly disagree",
                                                                 "strongly agree", "disagree"}),
                                                    lex),
                                      likert),
            1.0);
}

TEST(Spearman, Extremes) {
  const std::vector<double> a = {1, 2, 3, 4};
  const std::vector<double> b = {4, 3, 2, 1};
  EXPECT_EQ(spearman_rank_correlation(a, a), 1.0);
  EXPECT_EQ(spearman_rank_correlation(a, b), -1.0);
  EXPECT_THROW(spearman_rank_correlation(std::vector<std::string>{"a", "b"}, std::vector<std::string>{"a", "c"}),
               MismatchedItems);
}

TEST(BaselineOrdinal, Lexicographic) {
  const EncodedMatrix m = baseline_ordinal_encode(text_column({"good", "bad"}));
  EXPECT_EQ(m.at(0, 0), 1.0);
  EXPECT_EQ(m.at(1, 0), 0.0);
  EXPECT_EQ(baseline_order(text_column({"a", "b", "c"})), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(TargetEncode, SmoothedMeans) {
  const Column c = text_column({"a", "a", "b"});
  const std::vector<double> y = {1.0, 3.0, 5.0};
  const EncodedMatrix m = target_encode(c, y, 1.0);
  const double mean = 3.0;
  EXPECT_DOUBLE_EQ(m.at(0, 0), (2 * 2.0 + mean) / 3.0);
  EXPECT_DOUBLE_EQ(m.at(2, 0), (5.0 + mean) / 2.0);
}

TEST(EncodedMatrix, AppendChecksRows) {
  EncodedMatrix a{2, {{1, 2}}, {{"x", "x", EncoderId::Passthrough, 0}}};
  EncodedMatrix b{3, {{1, 2, 3}}, {{"y", "y", EncoderId::Passthrough, 0}}};
  EXPECT_THROW(a.append(b), DimensionMismatch);
  EXPECT_FALSE(a.has_nan());
}

}  // namespace
}  // namespace strclean
