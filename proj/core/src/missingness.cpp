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
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/special_functions/gamma.hpp>

#include "strclean/error.hpp"
#include "strclean/cleaning.hpp"

namespace strclean {

namespace {

constexpr double kRidge = 1e-6;
constexpr double kIndicatorCorrelation = 0.2;

bool is_numeric_column(const Column& column) {
  bool any = false;
  for (const auto& cell : column.cells) {
    if (cell.is_missing()) continue;
    if (!cell.is_numeric()) return false;
    any = true;
  }
  return any;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  if (x.size() < 2) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0 || syy <= 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

std::string_view mechanism_name(Mechanism m) {
  switch (m) {
    case Mechanism::MCAR: return "MCAR";
    case Mechanism::MAR: return "MAR";
    case Mechanism::MNAR: return "MNAR";
  }
  return "MCAR";
}

nlohmann::json MissingnessDiagnosis::to_json() const {
  return {{"mechanism", mechanism_name(mechanism)},
          {"statistic", statistic},
          {"dof", dof},
          {"p_value", p_value},
          {"notes", notes}};
}

double chi_square_sf(double x, double dof) {
  if (dof <= 0) return 1.0;
  if (x <= 0) return 1.0;
  return std::clamp(boost::math::gamma_q(dof / 2.0, x / 2.0), 0.0, 1.0);
}

MissingnessDiagnosis littles_test(const Table& table, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("littles_test: alpha must lie in (0,1)");
  MissingnessDiagnosis out;

  std::vector<const Column*> numeric;
  for (const auto& column : table.columns())
    if (is_numeric_column(column)) numeric.push_back(&column);
  if (numeric.empty()) {
    out.notes.emplace_back("no numeric columns; mechanism defaults to MCAR");
    return out;
  }

  const std::size_t p = numeric.size();
  const std::size_t n = table.n_rows();
  // NaN marks a missing cell.
  Eigen::MatrixXd x(n, p);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Cell& c = numeric[j]->cells[i];
      x(i, j) = c.is_missing() ? std::nan("") : c.numeric_value();
    }
  auto observed = [&](std::size_t i, std::size_t j) { return !std::isnan(x(i, j)); };

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(p);
  for (std::size_t j = 0; j < p; ++j) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (observed(i, j)) {
        mean(j) += x(i, j);
        ++count;
      }
    mean(j) /= static_cast<double>(count);
  }

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(p, p);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a; b < p; ++b) {
      double sum = 0;
      std::size_t count = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (observed(i, a) && observed(i, b)) {
          sum += (x(i, a) - mean(a)) * (x(i, b) - mean(b));
          ++count;
        }
      cov(a, b) = cov(b, a) = count > 0 ? sum / static_cast<double>(count) : 0.0;
    }

  // Missingness patterns as bit strings over the numeric columns.
  std::map<std::vector<bool>, std::vector<std::size_t>> patterns;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> mask(p);
    for (std::size_t j = 0; j < p; ++j) mask[j] = observed(i, j);
    patterns[mask].push_back(i);
  }

  bool ridged = false;
  double d2 = 0.0;
  long long observed_dims = 0;
  for (const auto& [mask, rows] : patterns) {
    std::vector<std::size_t> vars;
    for (std::size_t j = 0; j < p; ++j)
      if (mask[j]) vars.push_back(j);
    if (vars.empty()) continue;
    const auto k = static_cast<Eigen::Index>(vars.size());
    observed_dims += k;

    Eigen::VectorXd diff(k);
    Eigen::MatrixXd sub(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
      double s = 0;
      for (auto i : rows) s += x(i, vars[a]);
      diff(a) = s / static_cast<double>(rows.size()) - mean(vars[a]);
      for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = cov(vars[a], vars[b]);
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(sub);
    const double scale = std::max(1.0, sub.diagonal().cwiseAbs().maxCoeff());
    const bool singular = ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
                          ldlt.vectorD().minCoeff() <= 1e-12 * scale;
    if (singular) {
      ridged = true;
      sub += kRidge * Eigen::MatrixXd::Identity(k, k);
      ldlt.compute(sub);
    }
    d2 += static_cast<double>(rows.size()) * diff.dot(ldlt.solve(diff));
  }
  if (ridged) out.notes.emplace_back("singular covariance; ridge 1e-6*I added");

  out.statistic = std::max(0.0, d2);
  out.dof = static_cast<int>(observed_dims - static_cast<long long>(p));
  if (out.dof < 0) out.dof = 0;
  out.p_value = chi_square_sf(out.statistic, out.dof);
  if (out.p_value > alpha) {
    out.mechanism = Mechanism::MCAR;
    return out;
  }

  out.mechanism = Mechanism::MNAR;
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = 0; k < p && out.mechanism == Mechanism::MNAR; ++k) {
      if (k == j) continue;
      std::vector<double> indicator, values;
      for (std::size_t i = 0; i < n; ++i)
        if (observed(i, k)) {
          indicator.push_back(observed(i, j) ? 0.0 : 1.0);
          values.push_back(x(i, k));
        }
      if (std::abs(pearson(indicator, values)) > kIndicatorCorrelation) out.mechanism = Mechanism::MAR;
    }
  }
  return out;
}

}  // namespace strclean
