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
#include <cmath>
#include <fstream>
#include <numeric>

#include "strclean/error.hpp"
#include "strclean/ordinality.hpp"

namespace strclean {

namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double log_loss(std::span<const int> y, const std::vector<double>& score) {
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    // log(1 + exp(-s)) for y=1 and log(1 + exp(s)) for y=0, computed stably.
    const double s = y[i] == 1 ? -score[i] : score[i];
    total += s > 0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s));
  }
  return total / static_cast<double>(y.size());
}

class TreeBuilder {
 public:
  TreeBuilder(std::span<const FeatureVector> x, const std::vector<double>& residual, const GbcHyperparams& params)
      : x_(x), r_(residual), params_(params) {}

  RegressionTree build() {
    std::vector<std::size_t> rows(x_.size());
    std::iota(rows.begin(), rows.end(), 0);
    grow(rows, 0);
    return std::move(tree_);
  }

 private:
  int grow(const std::vector<std::size_t>& rows, int depth) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    double sum = 0.0;
    for (auto i : rows) sum += r_[i];
    tree_.nodes[id].value = sum / static_cast<double>(rows.size());
    if (depth >= params_.max_depth || rows.size() < 2 * params_.min_samples_leaf) return id;

    const double n = static_cast<double>(rows.size());
    const double parent = sum * sum / n;
    double best_gain = 1e-12 * std::max(1.0, std::abs(parent));
    int best_feature = -1;
    double best_threshold = 0.0;
    std::vector<std::size_t> order = rows;
    for (std::size_t f = 0; f < kOrdinalityFeatureCount; ++f) {
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x_[a][f] < x_[b][f]; });
      double left_sum = 0.0;
      for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        left_sum += r_[order[k]];
        const double lo = x_[order[k]][f];
        const double hi = x_[order[k + 1]][f];
        const std::size_t n_left = k + 1;
        const std::size_t n_right = order.size() - n_left;
        if (lo == hi || n_left < params_.min_samples_leaf || n_right < params_.min_samples_leaf) continue;
        const double right_sum = sum - left_sum;
        // Variance reduction equals this gain up to the constant parent term.
        const double gain = left_sum * left_sum / static_cast<double>(n_left) +
                            right_sum * right_sum / static_cast<double>(n_right) - parent;
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = static_cast<int>(f);
          best_threshold = lo + (hi - lo) / 2.0;
          if (best_threshold >= hi) best_threshold = lo;
        }
      }
    }
    if (best_feature < 0) return id;

    std::vector<std::size_t> left, right;
    for (auto i : rows) (x_[i][static_cast<std::size_t>(best_feature)] <= best_threshold ? left : right).push_back(i);
    tree_.nodes[id].feature = best_feature;
    tree_.nodes[id].threshold = best_threshold;
    const int l = grow(left, depth + 1);
    const int r = grow(right, depth + 1);
    tree_.nodes[id].left = l;
    tree_.nodes[id].right = r;
    return id;
  }

  std::span<const FeatureVector> x_;
  const std::vector<double>& r_;
  const GbcHyperparams& params_;
  RegressionTree tree_;
};

}  // namespace

double RegressionTree::predict(const FeatureVector& x) const {
  if (nodes.empty()) return 0.0;
  std::size_t i = 0;
  while (nodes[i].feature >= 0)
    i = static_cast<std::size_t>(x[static_cast<std::size_t>(nodes[i].feature)] <= nodes[i].threshold ? nodes[i].left
                                                                                                        : nodes[i].right);
  return nodes[i].value;
}

GbcModel::GbcModel(double base_score, double learning_rate, std::vector<RegressionTree> trees)
    : base_score_(base_score), learning_rate_(learning_rate), trees_(std::move(trees)) {}

double GbcModel::raw_score(const FeatureVector& x) const {
  double s = 0.0;
  for (const auto& t : trees_) s += t.predict(x);
  return base_score_ + learning_rate_ * s;
}

double GbcModel::predict_proba(const FeatureVector& x) const {
  // Clamp so the probability stays strictly inside (0,1).
  return std::clamp(sigmoid(raw_score(x)), 1e-15, 1.0 - 1e-15);
}

nlohmann::json GbcModel::to_json() const {
  nlohmann::json trees = nlohmann::json::array();
  for (const auto& t : trees_) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : t.nodes)
      nodes.push_back({{"feature", n.feature},
                       {"threshold", n.threshold},
                       {"left", n.left},
                       {"right", n.right},
                       {"value", n.value}});
    trees.push_back(std::move(nodes));
  }
  return {{"format", "strclean-gbc"},
          {"version", 1},
          {"n_features", kOrdinalityFeatureCount},
          {"base_score", base_score_},
          {"learning_rate", learning_rate_},
          {"trees", std::move(trees)}};
}

GbcModel GbcModel::from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object() || doc.at("format") != "strclean-gbc" || doc.at("version") != 1)
      throw SchemaError("not a strclean-gbc version 1 model");
    if (doc.at("n_features").get<std::size_t>() != kOrdinalityFeatureCount)
      throw SchemaError("model expects a different feature count");
    std::vector<RegressionTree> trees;
    for (const auto& t : doc.at("trees")) {
      RegressionTree tree;
      for (const auto& n : t) {
        TreeNode node;
        node.feature = n.at("feature").get<int>();
        node.threshold = n.at("threshold").get<double>();
        node.left = n.at("left").get<int>();
        node.right = n.at("right").get<int>();
        node.value = n.at("value").get<double>();
        tree.nodes.push_back(node);
      }
      const int size = static_cast<int>(tree.nodes.size());
      if (size == 0) throw SchemaError("empty tree");
      // Children must point forward so prediction always terminates.
      for (int i = 0; i < size; ++i) {
        const auto& node = tree.nodes[static_cast<std::size_t>(i)];
        if (node.feature == -1) continue;
        if (node.feature < 0 || node.feature >= static_cast<int>(kOrdinalityFeatureCount) || node.left <= i ||
            node.right <= i || node.left >= size || node.right >= size)
          throw SchemaError("malformed tree node");
      }
      trees.push_back(std::move(tree));
    }
    return GbcModel(doc.at("base_score").get<double>(), doc.at("learning_rate").get<double>(), std::move(trees));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed model: ") + e.what());
  }
}

GbcModel train_gbc(std::span<const FeatureVector> x, std::span<const int> labels, const GbcHyperparams& params) {
  if (x.size() != labels.size()) throw DimensionMismatch("features and labels differ in length");
  const auto positives = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
  if (positives == 0 || positives == labels.size()) throw DegenerateLabels("training labels contain a single class");
  if (params.n_trees < 0 || params.max_depth < 0 || !(params.learning_rate > 0))
    throw Error("invalid boosting hyperparameters");

  const double prior = static_cast<double>(positives) / static_cast<double>(labels.size());
  const double base = std::log(prior / (1.0 - prior));
  std::vector<double> score(x.size(), base);
  std::vector<double> residual(x.size());
  std::vector<RegressionTree> trees;
  std::vector<double> loss{log_loss(labels, score)};
  for (int t = 0; t < params.n_trees; ++t) {
    for (std::size_t i = 0; i < x.size(); ++i) residual[i] = labels[i] - sigmoid(score[i]);
    RegressionTree tree = TreeBuilder(x, residual, params).build();
    for (std::size_t i = 0; i < x.size(); ++i) score[i] += params.learning_rate * tree.predict(x[i]);
    trees.push_back(std::move(tree));
    loss.push_back(log_loss(labels, score));
  }
  GbcModel model(base, params.learning_rate, std::move(trees));
  model.set_training_loss(std::move(loss));
  return model;
}

GbcModel train_gbc(const std::vector<LabeledFeatures>& dataset, const GbcHyperparams& params) {
  std::vector<FeatureVector> x;
  std::vector<int> y;
  for (const auto& d : dataset) {
    x.push_back(d.features.to_vector());
    y.push_back(d.label == StatType::Ordinal ? 1 : 0);
  }
  return train_gbc(x, y, params);
}

StatTypePrediction predict_stat_type(const GbcModel& model, const OrdinalityFeatures& features) {
  const double p = model.predict_proba(features.to_vector());
  return {p >= 0.5 ? StatType::Ordinal : StatType::Nominal, p};
}

void save_model(const GbcModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write model " + path.string());
  out << model.to_json().dump(2) << '\n';
  if (!out) throw IoError("failed writing model " + path.string());
}

GbcModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("model " + path.string() + " is not valid JSON: " + e.what());
  }
  return GbcModel::from_json(doc);
}

}  // namespace strclean
