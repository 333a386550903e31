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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "strclean/cleaning.hpp"
#include "strclean/corpus.hpp"
#include "strclean/encoders.hpp"
#include "strclean/pfsm.hpp"
#include "strclean/pipeline.hpp"
#include "strclean/processing.hpp"

namespace fs = std::filesystem;
using namespace strclean;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const fs::path& data_dir() {
  static const fs::path dir = STRCLEAN_TEST_DATA_DIR;
  return dir;
}

const Resources& resources() {
  static const Resources r = [] {
    PipelineConfig config;
    config.paths.data_dir = data_dir();
    return Resources::load(config);
  }();
  return r;
}

// Golden inference corpus: every special kind recognized, no negative promoted.
Outcome criterion_inference() {
  const LabeledCorpus corpus = LabeledCorpus::load(data_dir() / "corpus/inference_golden.json");
  const Registry registry = build_registry();
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_kind;  // label -> (correct, total)
  std::size_t false_positives = 0;
  const auto start = Clock::now();
  for (const auto& lc : corpus.columns) {
    const ColumnProfile profile = infer_column(lc.to_column(), registry);
    auto& [correct, total] = per_kind[lc.label];
    ++total;
    if (kind_name(profile.winner) == lc.label) ++correct;
    if (lc.label == "Standard" && is_feature_kind(profile.winner)) ++false_positives;
  }
  const double elapsed = seconds_since(start);

  bool pass = elapsed < 10.0 && false_positives == 0;
  std::string detail;
  for (StringFeatureKind kind : kFeatureKinds) {
    const std::string name{kind_name(kind)};
    const auto [correct, total] = per_kind[name];
    const double acc = total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
    const bool lenient = kind == StringFeatureKind::Sentence || kind == StringFeatureKind::Filepath;
    if (total < 20 || acc < (lenient ? 0.75 : 1.0)) pass = false;
    detail += fmt("%s %zu/%zu ", name.c_str(), correct, total);
  }
  const auto [neg_correct, neg_total] = per_kind["Standard"];
  if (neg_total < 20) pass = false;
  detail += fmt("negatives %zu/%zu false_positives %zu time %.2fs", neg_correct, neg_total, false_positives, elapsed);
  return {pass, detail};
}

LoocvResult corpus_loocv(const fs::path& path, std::size_t* ordinal, std::size_t* nominal) {
  const LabeledCorpus corpus = LabeledCorpus::load(path);
  *ordinal = *nominal = 0;
  for (const auto& c : corpus.columns) (c.label == "ordinal" ? *ordinal : *nominal) += 1;
  return loocv(corpus_features(corpus, resources().embeddings, resources().keywords));
}

Outcome criterion_stattype() {
  std::size_t ordinal = 0;
  std::size_t nominal = 0;
  const LoocvResult cv = corpus_loocv(data_dir() / "corpus/stattype_corpus.json", &ordinal, &nominal);
  const bool pass = ordinal == 81 && nominal == 68 && cv.accuracy >= 0.90 && cv.f1 >= 0.90 && cv.off_diagonal() <= 0.10;
  return {pass, fmt("columns %zu ordinal / %zu nominal, accuracy %.4f f1 %.4f off-diagonal %.4f "
                    "confusion [[%zu %zu] [%zu %zu]]",
                    ordinal, nominal, cv.accuracy, cv.f1, cv.off_diagonal(), cv.confusion[0][0], cv.confusion[0][1],
                    cv.confusion[1][0], cv.confusion[1][1])};
}

std::string mixed_corpus_info() {
  std::size_t ordinal = 0;
  std::size_t nominal = 0;
  const LoocvResult cv = corpus_loocv(data_dir() / "corpus/stattype_mixed_corpus.json", &ordinal, &nominal);
  return fmt("mixed corpus (%zu ordinal / %zu nominal) accuracy %.4f f1 %.4f off-diagonal %.4f", ordinal, nominal,
             cv.accuracy, cv.f1, cv.off_diagonal());
}

Outcome criterion_ordering() {
  if (!resources().lexicon) return {false, "sentiment lexicon missing"};
  const LikertSuite suite = LikertSuite::load(data_dir() / "corpus/likert_suite.json");
  const OrderingEvaluation eval = evaluate_ordering(suite, *resources().lexicon);
  double agreement = -2.0;
  for (const auto& s : eval.scales)
    if (s.name == "agreement") agreement = s.lexicon;
  const bool pass = eval.scales.size() >= 15 && eval.mean_lexicon >= 0.7 && eval.mean_lexicon > eval.mean_baseline &&
                    agreement == 1.0;
  return {pass, fmt("%zu scales, mean lexicon %.4f baseline %.4f, agreement %.4f", eval.scales.size(),
                    eval.mean_lexicon, eval.mean_baseline, agreement)};
}

Outcome criterion_dms() {
  std::mt19937_64 rng(4);
  const Cardinal dirs[] = {Cardinal::N, Cardinal::E, Cardinal::S, Cardinal::W};
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Cardinal dir = dirs[rng() % 4];
    const bool latitude = dir == Cardinal::N || dir == Cardinal::S;
    const int max_deg = latitude ? 89 : 179;
    const double deg = static_cast<double>(std::uniform_int_distribution<int>(0, max_deg)(rng));
    const double min = static_cast<double>(std::uniform_int_distribution<int>(0, 59)(rng));
    const double sec = std::uniform_real_distribution<double>(0.0, 60.0)(rng);
    const double sign = (dir == Cardinal::S || dir == Cardinal::W) ? -1.0 : 1.0;
    const double expected = sign * (deg + min / 60.0 + sec / 3600.0);
    worst = std::max(worst, std::fabs(dms_to_decimal(deg, min, sec, dir) - expected));
  }
  return {worst <= 1e-9, fmt("1000 tuples, max abs error %.3g", worst)};
}

Table gaussian_table(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal;
  Table table(n);
  std::vector<Column> cols = {{"A", {}}, {"B", {}}, {"C", {}}};
  for (std::size_t r = 0; r < n; ++r) {
    const double z = normal(rng);
    cols[0].cells.push_back(Cell::number(z));
    cols[1].cells.push_back(Cell::number(0.6 * z + 0.8 * normal(rng)));
    cols[2].cells.push_back(Cell::number(normal(rng)));
  }
  for (auto& c : cols) table.add_column(std::move(c));
  return table;
}

Outcome criterion_littles_test() {
  constexpr int kTrials = 200;
  constexpr std::size_t kRows = 200;
  std::mt19937_64 rng(5);
  std::bernoulli_distribution drop(0.2);
  int null_rejections = 0;
  for (int t = 0; t < kTrials; ++t) {
    Table table = gaussian_table(rng, kRows);
    for (std::size_t c = 0; c < table.n_cols(); ++c)
      for (auto& cell : table.column(c).cells)
        if (drop(rng)) cell = Cell::missing();
    if (littles_test(table).p_value <= 0.05) ++null_rejections;
  }

  int detections = 0;
  for (int t = 0; t < kTrials; ++t) {
    Table table = gaussian_table(rng, kRows);
    std::vector<double> a;
    for (const auto& cell : table.column(0).cells) a.push_back(cell.as_number());
    std::vector<double> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    const double median = 0.5 * (sorted[kRows / 2 - 1] + sorted[kRows / 2]);
    for (std::size_t r = 0; r < kRows; ++r)
      if (a[r] > median) table.column(1).cells[r] = Cell::missing();
    const MissingnessDiagnosis d = littles_test(table);
    if (d.p_value < 0.05 && d.mechanism != Mechanism::MCAR) ++detections;
  }
  const double size = static_cast<double>(null_rejections) / kTrials;
  const double power = static_cast<double>(detections) / kTrials;
  return {size >= 0.02 && size <= 0.10 && power >= 0.9,
          fmt("MCAR rejection rate %.3f, MAR power %.3f", size, power)};
}

std::string random_word(std::mt19937_64& rng, std::size_t length) {
  static const std::string letters = "abcdefghijkl";
  std::string s;
  for (std::size_t i = 0; i < length; ++i) s += letters[rng() % letters.size()];
  return s;
}

std::string mutate(std::mt19937_64& rng, std::string s, int edits) {
  static const std::string letters = "abcdefghijkl";
  for (int e = 0; e < edits; ++e) {
    const std::size_t pos = rng() % (s.size() + 1);
    switch (rng() % 3) {
      case 0:
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), letters[rng() % letters.size()]);
        break;
      case 1:
        if (pos < s.size()) s.erase(pos, 1);
        break;
      default:
        if (pos < s.size()) s[pos] = letters[rng() % letters.size()];
    }
  }
  return s;
}

Outcome criterion_encoders() {
  constexpr std::size_t k = 256;
  std::mt19937_64 rng(6);
  std::size_t within = 0;
  double worst_z = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::string a = random_word(rng, 6 + rng() % 15);
    const std::string b = mutate(rng, a, static_cast<int>(rng() % 9));
    const double j = jaccard(ngram_set(a), ngram_set(b));
    const auto sa = minhash_signature(a, k, 0);
    const auto sb = minhash_signature(b, k, 0);
    std::size_t equal = 0;
    for (std::size_t c = 0; c < k; ++c) equal += sa[c] == sb[c] ? 1 : 0;
    const double rate = static_cast<double>(equal) / static_cast<double>(k);
    const double sigma = std::sqrt(j * (1.0 - j) / static_cast<double>(k));
    const double diff = std::fabs(rate - j);
    if (sigma == 0.0 ? diff == 0.0 : diff <= 3.0 * sigma) ++within;
    if (sigma > 0.0) worst_z = std::max(worst_z, diff / sigma);
  }

  // Objective trace on a random count matrix, then an exact rank-1 matrix.
  DenseMatrix counts(20, 30);
  std::poisson_distribution<int> poisson(2.0);
  for (auto& v : counts.data) v = poisson(rng);
  const GammaPoissonFit fit = gamma_poisson_fit(counts, 5, 200, 0);
  std::size_t increases = 0;
  for (std::size_t i = 1; i < fit.objective.size(); ++i)
    if (fit.objective[i] > fit.objective[i - 1] * (1.0 + 1e-12)) ++increases;

  DenseMatrix rank1(6, 8);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 8; ++c) rank1(r, c) = static_cast<double>(r + 1) * static_cast<double>((c * 7) % 5 + 1);
  const GammaPoissonFit exact = gamma_poisson_fit(rank1, 1, 100, 0);
  const double rank1_kl = kl_divergence(rank1, multiply(exact.activations, exact.loadings));

  Column column{"product", {}};
  for (const char* v : {"Garden tools", "Kitchen", "Toys", "Office chairs", "kitchen", "Garden tools"})
    column.cells.push_back(Cell::text(v));
  const std::vector<std::string> categories = unique_values(column);
  const EncodedMatrix sim = similarity_encode(column, categories);
  bool diagonal = true;
  for (std::size_t r = 0; r < column.cells.size(); ++r) {
    const auto it = std::find(categories.begin(), categories.end(), encoding_text(column.cells[r]));
    diagonal = diagonal && sim.at(r, static_cast<std::size_t>(it - categories.begin())) == 1.0;
  }

  const bool pass = within == 100 && increases == 0 && rank1_kl <= 1e-6 && diagonal;
  return {pass, fmt("minhash %zu/100 pairs within 3 sigma (worst %.2f sigma), KL increases %zu over %zu steps, "
                    "rank-1 KL %.3g, similarity diagonal %s",
                    within, worst_z, increases, fit.objective.size() - 1, rank1_kl, diagonal ? "exact" : "off")};
}

int run_cli(const std::string& args) {
  const std::string command = std::string("\"") + STRCLEAN_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quoted(const fs::path& p) { return '"' + p.string() + '"'; }

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

Outcome criterion_end_to_end() {
  const fs::path work = STRCLEAN_WORK_DIR;
  fs::create_directories(work);
  const fs::path fixture = data_dir() / "fixtures/e2e_fixture.csv";
  const nlohmann::json manifest = nlohmann::json::parse(read_file(data_dir() / "fixtures/e2e_manifest.json"));

  auto clean = [&](const std::string& tag) {
    return run_cli("clean " + quoted(fixture) + " --out " + quoted(work / (tag + ".csv")) + " --report " +
                   quoted(work / (tag + ".json")) + " --seed 7 --data-dir " + quoted(data_dir()));
  };
  const auto start = Clock::now();
  const int first = clean("run1");
  const double elapsed = seconds_since(start);
  const int second = clean("run2");
  if (first != 0 || second != 0) return {false, fmt("clean exit codes %d and %d", first, second)};

  const std::string matrix = read_file(work / "run1.csv");
  const bool identical = !matrix.empty() && matrix == read_file(work / "run2.csv");
  const auto rows = split_csv(matrix);
  std::size_t bad_cells = 0;
  std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != width) ++bad_cells;
    for (const auto& f : rows[r]) {
      char* end = nullptr;
      const double v = std::strtod(f.c_str(), &end);
      if (f.empty() || *end != '\0' || !std::isfinite(v)) ++bad_cells;
    }
  }
  const std::size_t records = rows.empty() ? 0 : rows.size() - 1;

  const nlohmann::json report = nlohmann::json::parse(read_file(work / "run1.json"));
  auto has_repair = [&](const nlohmann::json& planted, const char* action, const nlohmann::json* expected) {
    for (const auto& e : report["repairs"])
      if (e["column"] == planted["column"] && e["row"] == planted["row"] && e["action"] == action &&
          (expected == nullptr || e["new"] == *expected))
        return true;
    return false;
  };
  std::size_t typos = 0;
  for (const auto& t : manifest["typos"]) typos += has_repair(t, "TypoFixed", &t["expected"]) ? 1 : 0;
  std::size_t anomalies = 0;
  for (const auto& a : manifest["anomalies"]) anomalies += has_repair(a, "OutlierCoerced", nullptr) ? 1 : 0;

  std::set<std::string> special_kinds;
  std::size_t kind_matches = 0;
  for (const auto& col : report["columns"]) {
    const std::string kind = col["profile"]["winner"];
    if (manifest["kinds"].value(col["name"].get<std::string>(), "") == kind) ++kind_matches;
    const auto parsed = parse_kind(kind);
    if (parsed && is_feature_kind(*parsed)) special_kinds.insert(kind);
  }

  const bool pass = identical && bad_cells == 0 && records == manifest["rows"].get<std::size_t>() &&
                    typos == manifest["typos"].size() && anomalies == manifest["anomalies"].size() &&
                    special_kinds.size() == 9 && kind_matches == manifest["kinds"].size() && elapsed < 60.0;
  return {pass, fmt("%zu rows x %zu columns, non-numeric cells %zu, typos flagged %zu/%zu, anomalies flagged %zu/%zu, "
                    "kinds %zu/%zu (%zu special), identical %s, run %.2fs",
                    records, width, bad_cells, typos, manifest["typos"].size(), anomalies,
                    manifest["anomalies"].size(), kind_matches, manifest["kinds"].size(), special_kinds.size(),
                    identical ? "yes" : "no", elapsed)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"type inference on the golden corpus", criterion_inference},
      {"statistical type LOOCV", criterion_stattype},
      {"ordinal ordering on the Likert suite", criterion_ordering},
      {"DMS conversion", criterion_dms},
      {"Little's test calibration and power", criterion_littles_test},
      {"encoder properties", criterion_encoders},
      {"end-to-end clean", criterion_end_to_end},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  try {
    std::printf("INFO %s\n", mixed_corpus_info().c_str());
  } catch (const std::exception& e) {
    std::printf("INFO mixed corpus unavailable: %s\n", e.what());
  }
  return failures == 0 ? 0 : 1;
}
