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

#include <string>

#include <benchmark/benchmark.h>

#include "strclean/pfsm.hpp"

namespace strclean {
namespace {

Column email_column(std::size_t n) {
  Column c{"contact", {}};
  for (std::size_t i = 0; i < n; ++i) c.cells.push_back(Cell::text("user" + std::to_string(i) + "@example.org"));
  return c;
}

void BM_BuildRegistry(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_registry());
}
BENCHMARK(BM_BuildRegistry);

void BM_InferColumn(benchmark::State& state) {
  const Registry registry = build_registry();
  const Column column = email_column(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(infer_column(column, registry));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InferColumn)->Range(100, 10000);

void BM_MachineLogprob(benchmark::State& state) {
  const Registry registry = build_registry();
  const MachineSpec& machine = *registry.find(StringFeatureKind::Sentence);
  const std::string value = "The quick brown fox jumps over the lazy dog near the river bank.";
  for (auto _ : state) benchmark::DoNotOptimize(machine.logprob(value));
}
BENCHMARK(BM_MachineLogprob);

}  // namespace
}  // namespace strclean
