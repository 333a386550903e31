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
#include <limits>
#include <random>
#include <unordered_map>

#include "strclean/error.hpp"
#include "strclean/pfsm.hpp"

namespace strclean {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  const double m = std::max(a, b);
  if (m == kNegInf) return kNegInf;
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

struct Candidate {
  StringFeatureKind kind;
  const MachineSpec* machine;
};

}  // namespace

double uniform_anomaly_logprob(std::string_view value) {
  return -static_cast<double>(alphabet::length(value)) * std::log(static_cast<double>(alphabet::kSize));
}

std::string scoring_text(const Cell& cell) { return cell.to_string(); }

nlohmann::json ColumnProfile::to_json() const {
  nlohmann::json post = nlohmann::json::object();
  for (const auto& [kind, p] : posterior) post[std::string(kind_name(kind))] = p;
  return {{"column", column_name},
          {"winner", std::string(kind_name(winner))},
          {"posterior", std::move(post)},
          {"anomaly_rows", anomaly_rows},
          {"missing_rows", missing_rows}};
}

ColumnProfile infer_column(const Column& column, const Registry& registry, const InferenceOptions& options) {
  if (column.cells.empty()) throw EmptyColumn("column '" + column.name + "' has no rows");
  if (!(options.p_anomaly > 0.0 && options.p_anomaly < 1.0)) {
    throw Error("anomaly weight must lie in (0, 1)");
  }
  const MachineSpec* missing_machine = registry.find(StringFeatureKind::MissingType);
  const MachineSpec* anything = registry.find(StringFeatureKind::AnomalyType);

  ColumnProfile profile;
  profile.column_name = column.name;

  std::vector<std::size_t> scorable;
  std::size_t numeric = 0;
  for (std::size_t r = 0; r < column.cells.size(); ++r) {
    const Cell& cell = column.cells[r];
    if (cell.is_missing() || (cell.is_text() && missing_machine->accepts(cell.as_text()))) {
      profile.missing_rows.push_back(r);
      continue;
    }
    scorable.push_back(r);
    if (cell.is_numeric()) ++numeric;
  }
  if (scorable.empty()) throw EmptyColumn("column '" + column.name + "' has no observed values");

  const bool numeric_path =
      static_cast<double>(numeric) >= options.numeric_majority * static_cast<double>(scorable.size());
  std::vector<Candidate> candidates;
  for (auto kind : kCandidateKinds) {
    if (numeric_path != is_numeric_kind(kind)) continue;
    const MachineSpec* m = kind == StringFeatureKind::Standard ? anything : registry.find(kind);
    if (m != nullptr) candidates.push_back({kind, m});
  }

  const double log_keep = std::log1p(-options.p_anomaly);
  const double log_anom = std::log(options.p_anomaly);

  // Per-row mixture terms, cached per distinct value and cell type.
  struct RowTerms {
    std::vector<double> keep;
    double anomaly;
  };
  std::unordered_map<std::string, RowTerms> cache;
  auto terms_for = [&](const Cell& cell) -> const RowTerms& {
    std::string key = scoring_text(cell);
    const bool type_outlier = numeric_path && cell.is_text();
    if (type_outlier) key.insert(0, 1, '\x01');
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const std::string text = scoring_text(cell);
    RowTerms t;
    t.anomaly = log_anom + uniform_anomaly_logprob(text);
    for (const auto& c : candidates) {
      t.keep.push_back(type_outlier ? kNegInf : log_keep + c.machine->logprob(text));
    }
    return cache.emplace(std::move(key), std::move(t)).first->second;
  };

  std::vector<std::size_t> sample = scorable;
  if (sample.size() > options.sample_limit) {
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = sample.size() - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(sample[i], sample[j]);
    }
    sample.resize(options.sample_limit);
    std::sort(sample.begin(), sample.end());
  }

  std::vector<double> scores(candidates.size(), 0.0);
  for (std::size_t r : sample) {
    const RowTerms& t = terms_for(column.cells[r]);
    for (std::size_t c = 0; c < candidates.size(); ++c) scores[c] += log_add(t.keep[c], t.anomaly);
  }

  std::size_t best = 0;
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  for (auto kind : kCandidateKinds) profile.posterior[kind] = 0.0;
  double total = 0.0;
  std::vector<double> weights(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    weights[c] = std::exp(scores[c] - scores[best]);
    total += weights[c];
  }
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    profile.posterior[candidates[c].kind] = weights[c] / total;
  }
  profile.winner = candidates[best].kind;

  for (std::size_t r : scorable) {
    const RowTerms& t = terms_for(column.cells[r]);
    if (t.anomaly > t.keep[best]) profile.anomaly_rows.push_back(r);
  }
  return profile;
}

std::vector<std::size_t> detect_outlier_rows(const ColumnProfile& profile, const Column& column) {
  std::vector<std::size_t> rows;
  for (std::size_t r : profile.anomaly_rows) {
    if (r < column.cells.size()) rows.push_back(r);
  }
  return rows;
}

}  // namespace strclean
