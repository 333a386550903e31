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
#include <unordered_map>

#include <Eigen/Dense>

#include "strclean/encoders.hpp"
#include "strclean/error.hpp"
#include "strclean/hashing.hpp"

namespace strclean {

namespace {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const Matrix> view(const DenseMatrix& m) {
  return {m.data.data(), static_cast<Eigen::Index>(m.rows), static_cast<Eigen::Index>(m.cols)};
}

DenseMatrix to_dense(const Matrix& m) {
  DenseMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  Eigen::Map<Matrix>(out.data.data(), m.rows(), m.cols()) = m;
  return out;
}

double kl(const Matrix& v, const Matrix& r) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = v.data()[i];
    const double b = r.data()[i];
    total += (a > 0 ? a * std::log(a / b) : 0.0) - a + b;
  }
  return total;
}

/// x / y with 0/0 read as 0, so zero rows and columns stay fixed.
double safe_ratio(double x, double y) { return y > 0 ? x / y : 0.0; }

}  // namespace

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw DimensionMismatch("matrix shapes do not align");
  return to_dense(view(a) * view(b));
}

double kl_divergence(const DenseMatrix& v, const DenseMatrix& reconstruction) {
  if (v.rows != reconstruction.rows || v.cols != reconstruction.cols)
    throw DimensionMismatch("matrix shapes differ");
  return kl(view(v), view(reconstruction));
}

GammaPoissonFit gamma_poisson_fit(const DenseMatrix& counts, std::size_t d, std::size_t iterations,
                                  std::uint64_t seed) {
  if (d == 0) throw Error("topic count must be positive");
  const Matrix v = view(counts);
  if (v.size() == 0 || v.minCoeff() < 0 || v.maxCoeff() <= 0)
    throw DegenerateInput("count matrix must be nonnegative and not all zero");
  const auto n = v.rows();
  const auto m = v.cols();
  const auto k = static_cast<Eigen::Index>(d);

  // Uniform (0.5, 1.5] noise scaled so the initial product matches the mean count.
  std::uint64_t state = splitmix64(seed);
  auto next = [&] {
    state = splitmix64(state);
    return 0.5 + unit_interval(state);
  };
  const double scale = std::sqrt(v.mean() / static_cast<double>(d));
  Matrix a(n, k), w(k, m);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = scale * next();
  for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = scale * next();

  GammaPoissonFit fit;
  Matrix r = a * w;
  fit.objective.push_back(kl(v, r));
  for (std::size_t it = 0; it < iterations; ++it) {
    Matrix ratio = v.binaryExpr(r, [](double x, double y) { return safe_ratio(x, y); });
    const Eigen::VectorXd w_sums = w.rowwise().sum();
    Matrix a_num = ratio * w.transpose();
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index t = 0; t < k; ++t) a(i, t) *= safe_ratio(a_num(i, t), w_sums(t));

    r = a * w;
    ratio = v.binaryExpr(r, [](double x, double y) { return safe_ratio(x, y); });
    const Eigen::RowVectorXd a_sums = a.colwise().sum();
    Matrix w_num = a.transpose() * ratio;
    for (Eigen::Index t = 0; t < k; ++t)
      for (Eigen::Index j = 0; j < m; ++j) w(t, j) *= safe_ratio(w_num(t, j), a_sums(t));

    r = a * w;
    fit.objective.push_back(kl(v, r));
  }

  // Normalize topics to unit mass and push the scale into the activations.
  for (Eigen::Index t = 0; t < k; ++t) {
    const double s = w.row(t).sum();
    if (s <= 0) continue;
    w.row(t) /= s;
    a.col(t) *= s;
  }
  fit.loadings = to_dense(w);
  fit.activations = to_dense(a);
  return fit;
}

EncodedMatrix gamma_poisson_encode(const Column& column, std::size_t d, std::size_t iterations, std::uint64_t seed) {
  const auto values = unique_values(column);
  std::map<std::string, std::size_t> vocabulary;
  std::vector<std::map<std::string, double>> gram_counts(values.size());
  for (std::size_t u = 0; u < values.size(); ++u) {
    std::string padded = " ";
    for (char c : values[u]) padded.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    padded.push_back(' ');
    if (values[u].empty()) padded = " ";
    if (padded.size() < 3) {
      gram_counts[u][padded] += 1;
    } else {
      for (std::size_t i = 0; i + 3 <= padded.size(); ++i) gram_counts[u][padded.substr(i, 3)] += 1;
    }
    for (const auto& [g, c] : gram_counts[u]) vocabulary.emplace(g, 0);
  }
  std::size_t next_id = 0;
  for (auto& [g, id] : vocabulary) id = next_id++;
  DenseMatrix counts(values.size(), vocabulary.size());
  for (std::size_t u = 0; u < values.size(); ++u)
    for (const auto& [g, c] : gram_counts[u]) counts(u, vocabulary.at(g)) = c;

  const GammaPoissonFit fit = gamma_poisson_fit(counts, d, iterations, seed);
  std::unordered_map<std::string, std::size_t> row_of;
  for (std::size_t u = 0; u < values.size(); ++u) row_of.emplace(values[u], u);

  EncodedMatrix out;
  out.n_rows = column.size();
  out.columns.assign(d, std::vector<double>(column.size()));
  for (std::size_t i = 0; i < column.size(); ++i) {
    const std::size_t u = row_of.at(encoding_text(column.cells[i]));
    for (std::size_t t = 0; t < d; ++t) out.columns[t][i] = fit.activations(u, t);
  }
  for (std::size_t t = 0; t < d; ++t)
    out.meta.push_back({column.name + "_gp_" + std::to_string(t), column.name, EncoderId::GammaPoisson, t});
  return out;
}

}  // namespace strclean
