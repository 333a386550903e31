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

#include "strclean/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <thread>

#include "strclean/error.hpp"
#include "strclean/hashing.hpp"
#include "strclean/text.hpp"

namespace strclean {

namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
 public:
  explicit StageTimer(RunReport& report) : report_(report), start_(Clock::now()) {}
  void mark(std::string stage) {
    const auto now = Clock::now();
    report_.timings_ms.emplace_back(std::move(stage),
                                    std::chrono::duration<double, std::milli>(now - start_).count());
    start_ = now;
  }

 private:
  RunReport& report_;
  Clock::time_point start_;
};

std::uint64_t column_seed(std::uint64_t seed, std::string_view name) { return splitmix64(seed ^ fnv1a64(name)); }

InferenceOptions inference_options(const PipelineConfig& config, std::string_view name) {
  InferenceOptions o = config.inference;
  o.seed = column_seed(config.seed, name);
  return o;
}

ColumnProfile fallback_profile(const Column& column) {
  ColumnProfile p;
  p.column_name = column.name;
  p.winner = StringFeatureKind::Standard;
  for (std::size_t i = 0; i < column.size(); ++i)
    if (column.cells[i].is_missing()) p.missing_rows.push_back(i);
  return p;
}

/// Numeric view of a column; unparseable text becomes Missing.
Column numeric_only(const Column& column, std::vector<std::string>& warnings) {
  Column out{column.name, {}};
  out.cells.reserve(column.size());
  for (std::size_t i = 0; i < column.size(); ++i) {
    const Cell& c = column.cells[i];
    if (c.is_missing() || c.is_numeric()) {
      out.cells.push_back(c);
      continue;
    }
    const Cell parsed = parse_field(trim(c.as_text()), {});
    if (!parsed.is_numeric())
      warnings.push_back(column.name + " row " + std::to_string(i) + ": non-numeric value '" + c.as_text() + "'");
    out.cells.push_back(parsed.is_numeric() ? parsed : Cell::missing());
  }
  return out;
}

ProcessedColumns process_kind(StringFeatureKind kind, const Column& column, const Resources& res) {
  const GeoTable* geo = res.geo ? &*res.geo : nullptr;
  switch (kind) {
    case StringFeatureKind::Coordinate: return process_coordinate(column, geo);
    case StringFeatureKind::Day: return process_day(column);
    case StringFeatureKind::Email: return process_email(column);
    case StringFeatureKind::Filepath: return process_filepath(column);
    case StringFeatureKind::Month: return process_month(column);
    case StringFeatureKind::NumericalString: return process_numerical(column);
    case StringFeatureKind::Sentence: return process_sentence(column, res.nouns);
    case StringFeatureKind::Url: return process_url(column);
    case StringFeatureKind::ZipCode: return process_zip(column, geo);
    case StringFeatureKind::BaseInteger:
    case StringFeatureKind::BaseFloat: {
      ProcessedColumns out;
      out.outputs.push_back({numeric_only(column, out.warnings), Directive::AlreadyNumeric});
      return out;
    }
    default: {
      ProcessedColumns out;
      out.outputs.push_back({column, Directive::NominalEncode});
      return out;
    }
  }
}

EncodedMatrix passthrough(const Column& column, std::vector<std::string>& warnings) {
  EncodedMatrix m;
  m.n_rows = column.size();
  std::vector<double> values(column.size());
  double sum = 0;
  std::size_t observed = 0;
  for (const auto& c : column.cells)
    if (c.is_numeric()) {
      sum += c.numeric_value();
      ++observed;
    }
  const double fill = observed == 0 ? 0.0 : sum / static_cast<double>(observed);
  std::size_t filled = 0;
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (column.cells[i].is_numeric()) {
      values[i] = column.cells[i].numeric_value();
    } else {
      values[i] = fill;
      ++filled;
    }
  }
  if (filled > 0)
    warnings.push_back(column.name + ": " + std::to_string(filled) + " empty numeric cells filled with the column mean");
  m.columns.push_back(std::move(values));
  m.meta.push_back({column.name, column.name, EncoderId::Passthrough, 0});
  return m;
}

}  // namespace

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

RunReport infer_table(const Table& input, const PipelineConfig& config, const Resources& resources) {
  RunReport report;
  report.n_rows = input.n_rows();
  report.seed = config.seed;
  report.warnings = resources.warnings;
  StageTimer timer(report);
  report.columns.resize(input.n_cols());
  parallel_for(input.n_cols(), config.threads, [&](std::size_t j) {
    const Column& column = input.column(j);
    ColumnReport& cr = report.columns[j];
    cr.name = column.name;
    try {
      cr.profile = infer_column(column, resources.registry, inference_options(config, column.name));
    } catch (const Error& e) {
      cr.profile = fallback_profile(column);
      cr.status = "downgraded";
      cr.warnings.push_back(e.what());
    }
    cr.final_kind = cr.profile.winner;
  });
  timer.mark("infer");
  return report;
}

PipelineResult run_pipeline(const Table& input, const PipelineConfig& config) {
  return run_pipeline(input, config, Resources::load(config));
}

PipelineResult run_pipeline(const Table& input, const PipelineConfig& config, const Resources& res) {
  PipelineResult result;
  RunReport& report = result.report;
  report.n_rows = input.n_rows();
  report.seed = config.seed;
  report.warnings = res.warnings;
  StageTimer timer(report);
  const std::size_t n_cols = input.n_cols();
  report.columns.resize(n_cols);

  // Infer.
  parallel_for(n_cols, config.threads, [&](std::size_t j) {
    const Column& column = input.column(j);
    ColumnReport& cr = report.columns[j];
    cr.name = column.name;
    try {
      cr.profile = infer_column(column, res.registry, inference_options(config, column.name));
    } catch (const EmptyColumn& e) {
      cr.profile = fallback_profile(column);
      cr.warnings.push_back(e.what());
    } catch (const Error& e) {
      cr.profile = fallback_profile(column);
      cr.status = "downgraded";
      cr.warnings.push_back(std::string("inference failed: ") + e.what());
    }
    cr.final_kind = cr.profile.winner;
  });
  timer.mark("infer");

  // Outlier repair; missing-token text is blanked here too.
  Table work = input;
  std::vector<RepairLog> logs(n_cols);
  parallel_for(n_cols, config.threads, [&](std::size_t j) {
    const ColumnReport& cr = report.columns[j];
    auto [column, log] = repair_type_outliers(work.column(j), cr.profile, res.registry);
    for (auto row : cr.profile.missing_rows) {
      Cell& cell = column.cells[row];
      if (!cell.is_text()) continue;
      log.entries.push_back({column.name, row, RepairAction::OutlierCoerced, cell, Cell::missing()});
      cell = Cell::missing();
    }
    std::sort(log.entries.begin(), log.entries.end(),
              [](const RepairEntry& a, const RepairEntry& b) { return a.row < b.row; });
    work.column(j) = std::move(column);
    logs[j] = std::move(log);
  });
  for (auto& log : logs) report.repairs.merge(log);
  timer.mark("repair_outliers");

  // Typos, Standard columns only.
  parallel_for(n_cols, config.threads, [&](std::size_t j) {
    logs[j] = {};
    if (report.columns[j].final_kind != StringFeatureKind::Standard) return;
    auto [column, log] = correct_typos(work.column(j), config.typos);
    work.column(j) = std::move(column);
    logs[j] = std::move(log);
  });
  for (auto& log : logs) report.repairs.merge(log);
  timer.mark("typos");

  report.missingness = littles_test(work, config.alpha);
  for (const auto& note : report.missingness.notes) report.warnings.push_back("missingness: " + note);
  timer.mark("missingness");

  ImputeResult imputed = impute(work, report.missingness, config.impute);
  report.repairs.merge(imputed.log);
  const std::set<std::string> dropped(imputed.dropped_columns.begin(), imputed.dropped_columns.end());
  for (auto& cr : report.columns)
    if (dropped.count(cr.name)) {
      cr.status = "dropped";
      cr.warnings.push_back("all values missing; column dropped");
    }
  work = std::move(imputed.table);
  timer.mark("impute");

  // One bounded re-inference pass over columns that were modified.
  std::set<std::string> changed;
  for (const auto& e : report.repairs.entries) changed.insert(e.column);
  std::vector<std::size_t> report_index(work.n_cols());
  for (std::size_t k = 0; k < work.n_cols(); ++k)
    for (std::size_t j = 0; j < n_cols; ++j)
      if (report.columns[j].name == work.column(k).name) report_index[k] = j;
  parallel_for(work.n_cols(), config.threads, [&](std::size_t k) {
    ColumnReport& cr = report.columns[report_index[k]];
    if (!changed.count(cr.name) || cr.status != "ok") return;
    try {
      cr.reinferred = infer_column(work.column(k), res.registry, inference_options(config, cr.name));
      cr.final_kind = cr.reinferred->winner;
    } catch (const Error& e) {
      cr.warnings.push_back(std::string("re-inference failed: ") + e.what());
    }
  });
  timer.mark("reinfer");

  // Type-specific processing.
  std::vector<ProcessedColumns> processed(work.n_cols());
  parallel_for(work.n_cols(), config.threads, [&](std::size_t k) {
    ColumnReport& cr = report.columns[report_index[k]];
    const Column& column = work.column(k);
    const StringFeatureKind kind = cr.status == "ok" ? cr.final_kind : StringFeatureKind::Standard;
    try {
      processed[k] = process_kind(kind, column, res);
    } catch (const Error& e) {
      cr.status = "downgraded";
      cr.warnings.push_back(std::string("processing failed, treated as nominal text: ") + e.what());
      processed[k] = {};
      processed[k].outputs.push_back({column, Directive::NominalEncode});
    }
    for (auto& w : processed[k].warnings) cr.warnings.push_back(std::move(w));
  });
  timer.mark("process");

  // Statistical type of Standard columns.
  parallel_for(work.n_cols(), config.threads, [&](std::size_t k) {
    ColumnReport& cr = report.columns[report_index[k]];
    if (cr.status != "ok" || cr.final_kind != StringFeatureKind::Standard) return;
    const Column& column = work.column(k);
    cr.features = extract_features(column, column.name, res.embeddings, res.keywords);
    if (!res.model) {
      cr.warnings.push_back("no statistical-type model; treated as nominal");
      return;
    }
    cr.stat_type = predict_stat_type(*res.model, *cr.features);
    if (cr.stat_type->label == StatType::Ordinal) processed[k].outputs.front().directive = Directive::OrdinalEncode;
  });
  timer.mark("stat_type");

  // Processed table.
  Table table(work.n_rows());
  for (std::size_t k = 0; k < work.n_cols(); ++k) {
    ColumnReport& cr = report.columns[report_index[k]];
    for (auto& out : processed[k].outputs) {
      out.column.name = table.unique_name(out.column.name);
      table.add_column(out.column);
      cr.outputs.push_back({out.column.name, out.directive, std::nullopt});
    }
  }
  result.processed = std::move(table);

  if (config.encode) {
    const Column* target = nullptr;
    if (!config.target_column.empty()) target = work.find(config.target_column);
    std::vector<double> target_values;
    if (target != nullptr)
      for (const auto& c : target->cells) target_values.push_back(c.is_numeric() ? c.numeric_value() : std::nan(""));

    struct Job {
      std::size_t k;
      std::size_t out;
    };
    std::vector<Job> jobs;
    for (std::size_t k = 0; k < work.n_cols(); ++k)
      for (std::size_t o = 0; o < processed[k].outputs.size(); ++o) jobs.push_back({k, o});
    std::vector<EncodedMatrix> blocks(jobs.size());
    std::vector<std::vector<std::string>> block_warnings(jobs.size());
    parallel_for(jobs.size(), config.threads, [&](std::size_t b) {
      const auto [k, o] = jobs[b];
      const ProcessedOutput& out = processed[k].outputs[o];
      const Column& column = out.column;
      const std::string& source = report.columns[report_index[k]].name;
      auto& warnings = block_warnings[b];
      const std::uint64_t seed = column_seed(config.seed, column.name);

      std::optional<EncoderId> forced;
      if (auto it = config.encoder_overrides.find(column.name); it != config.encoder_overrides.end())
        forced = it->second;
      else if (auto it2 = config.encoder_overrides.find(source); it2 != config.encoder_overrides.end() && o == 0)
        forced = it2->second;

      if (out.directive == Directive::AlreadyNumeric) {
        blocks[b] = passthrough(column, warnings);
        return;
      }
      EncoderId id = out.directive == Directive::OrdinalEncode ? EncoderId::Ordinal
                                                                : select_nominal_encoder(unique_values(column).size());
      if (forced) {
        if (*forced == EncoderId::Passthrough)
          warnings.push_back(column.name + ": Passthrough override ignored for a text column");
        else
          id = *forced;
      }
      if (id == EncoderId::Ordinal && !res.lexicon) {
        warnings.push_back(column.name + ": no sentiment lexicon, lexicographic ordinal encoding used");
        id = EncoderId::BaselineOrdinal;
      }
      if (id == EncoderId::Target && target_values.empty()) {
        warnings.push_back(column.name + ": target encoding needs a numeric target column");
        id = select_nominal_encoder(unique_values(column).size());
      }
      try {
        switch (id) {
          case EncoderId::Similarity: blocks[b] = similarity_encode(column); break;
          case EncoderId::GammaPoisson:
            blocks[b] = gamma_poisson_encode(column, config.gamma_poisson_dim, config.gamma_poisson_iterations, seed);
            break;
          case EncoderId::MinHash: blocks[b] = minhash_encode(column, config.minhash_k, seed); break;
          case EncoderId::Ordinal: blocks[b] = ordinal_encode(column, *res.lexicon); break;
          case EncoderId::BaselineOrdinal: blocks[b] = baseline_ordinal_encode(column); break;
          case EncoderId::Target:
            blocks[b] = target_encode(column, target_values, config.target_smoothing);
            break;
          case EncoderId::Passthrough: break;
        }
      } catch (const Error& e) {
        warnings.push_back(column.name + ": " + std::string(encoder_name(id)) + " failed (" + e.what() +
                           "), min-hash used instead");
        blocks[b] = minhash_encode(column, config.minhash_k, seed);
      }
    });

    EncodedMatrix matrix;
    matrix.n_rows = work.n_rows();
    std::set<std::string> used;
    for (std::size_t b = 0; b < jobs.size(); ++b) {
      ColumnReport& cr = report.columns[report_index[jobs[b].k]];
      for (auto& w : block_warnings[b]) cr.warnings.push_back(std::move(w));
      if (!blocks[b].meta.empty()) cr.outputs[jobs[b].out].encoder = blocks[b].meta.front().encoder;
      for (auto& m : blocks[b].meta) {
        std::string name = m.name;
        for (int s = 2; used.count(name); ++s) name = m.name + "_" + std::to_string(s);
        used.insert(name);
        m.name = std::move(name);
      }
      matrix.append(std::move(blocks[b]));
    }
    result.matrix = std::move(matrix);
    timer.mark("encode");
  }
  return result;
}

void write_matrix(const EncodedMatrix& matrix, std::ostream& out) {
  Table t(matrix.n_rows);
  for (std::size_t c = 0; c < matrix.n_cols(); ++c) {
    Column column{matrix.meta[c].name, {}};
    column.cells.reserve(matrix.n_rows);
    for (double v : matrix.columns[c]) column.cells.push_back(Cell::number(v));
    t.add_column(std::move(column));
  }
  write_delimited(t, out);
}

void write_matrix(const EncodedMatrix& matrix, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_matrix(matrix, out);
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace strclean
