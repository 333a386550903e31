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

#include <filesystem>

#include <benchmark/benchmark.h>

#include "strclean/pipeline.hpp"

namespace strclean {
namespace {

void BM_CleanFixture(benchmark::State& state) {
  PipelineConfig config;
  config.paths.data_dir = STRCLEAN_BENCH_DATA_DIR;
  config.threads = static_cast<std::size_t>(state.range(0));
  const Resources resources = Resources::load(config);
  const Table input = read_delimited(std::filesystem::path(STRCLEAN_BENCH_DATA_DIR) / "fixtures/e2e_fixture.csv");
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(input, config, resources));
}
BENCHMARK(BM_CleanFixture)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace strclean
