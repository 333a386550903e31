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

#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "strclean/cleaning.hpp"

namespace strclean {
namespace {

void BM_Levenshtein(benchmark::State& state) {
  const std::string a(static_cast<std::size_t>(state.range(0)), 'a');
  std::string b = a;
  b[b.size() / 2] = 'b';
  for (auto _ : state) benchmark::DoNotOptimize(levenshtein(a, b));
}
BENCHMARK(BM_Levenshtein)->Arg(8)->Arg(32)->Arg(128);

void BM_CorrectTypos(benchmark::State& state) {
  std::mt19937 rng(1);
  Column c{"city", {}};
  const char* cities[] = {"Amsterdam", "Rotterdam", "Utrecht", "Eindhoven", "Groningen", "Amsterdm", "Utrech"};
  for (int i = 0; i < state.range(0); ++i) c.cells.push_back(Cell::text(cities[rng() % 5 + (i % 97 == 0 ? 2 : 0)]));
  for (auto _ : state) benchmark::DoNotOptimize(correct_typos(c));
}
BENCHMARK(BM_CorrectTypos)->Arg(1000)->Arg(10000);

Table missing_table(std::size_t n) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> normal;
  std::bernoulli_distribution drop(0.2);
  Table t(n);
  for (const char* name : {"a", "b", "c", "d"}) {
    Column c{name, {}};
    for (std::size_t i = 0; i < n; ++i) c.cells.push_back(drop(rng) ? Cell::missing() : Cell::number(normal(rng)));
    t.add_column(std::move(c));
  }
  return t;
}

void BM_LittlesTest(benchmark::State& state) {
  const Table t = missing_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(littles_test(t));
}
BENCHMARK(BM_LittlesTest)->Arg(200)->Arg(5000);

void BM_ConditionalImpute(benchmark::State& state) {
  const Table t = missing_table(static_cast<std::size_t>(state.range(0)));
  MissingnessDiagnosis mar;
  mar.mechanism = Mechanism::MAR;
  for (auto _ : state) benchmark::DoNotOptimize(impute(t, mar));
}
BENCHMARK(BM_ConditionalImpute)->Arg(200)->Arg(5000);

}  // namespace
}  // namespace strclean
