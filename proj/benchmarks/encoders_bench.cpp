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

#include "strclean/encoders.hpp"

namespace strclean {
namespace {

Column products(std::size_t rows, std::size_t cardinality) {
  Column c{"product", {}};
  for (std::size_t i = 0; i < rows; ++i) c.cells.push_back(Cell::text("product line " + std::to_string(i % cardinality)));
  return c;
}

void BM_SimilarityEncode(benchmark::State& state) {
  const Column c = products(5000, 25);
  for (auto _ : state) benchmark::DoNotOptimize(similarity_encode(c));
}
BENCHMARK(BM_SimilarityEncode);

void BM_MinHashEncode(benchmark::State& state) {
  const Column c = products(5000, 2000);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minhash_encode(c, k, 0));
}
BENCHMARK(BM_MinHashEncode)->Arg(64)->Arg(256);

void BM_GammaPoissonEncode(benchmark::State& state) {
  const Column c = products(5000, 80);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_poisson_encode(c, 10, 100, 0));
}
BENCHMARK(BM_GammaPoissonEncode);

}  // namespace
}  // namespace strclean
