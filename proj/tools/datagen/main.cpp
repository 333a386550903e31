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
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#ifdef STRCLEAN_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "generators.hpp"

namespace fs = std::filesystem;
using namespace strclean;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dump(const nlohmann::json& doc) { return doc.dump(1) + '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerates the bundled synthetic data files"};
  std::string out_dir;
  bool check = false;
  app.add_option("--out", out_dir, "Data directory to write")->required();
  app.add_flag("--check", check, "Compare against the existing files instead of writing");
  CLI11_PARSE(app, argc, argv);

  const auto geo = datagen::geo_rows();
  auto fixture = datagen::e2e_fixture(geo);
  std::ostringstream csv;
  write_delimited(fixture.table, csv);

  const std::map<std::string, std::string> files = {
      {"geo/postal_codes.tsv", datagen::geo_tsv(geo)},
      {"corpus/inference_golden.json", dump(datagen::inference_corpus().to_json())},
      {"corpus/stattype_corpus.json", dump(datagen::stattype_corpus(false).to_json())},
      {"corpus/stattype_mixed_corpus.json", dump(datagen::stattype_corpus(true).to_json())},
      {"corpus/likert_suite.json", dump(datagen::likert_suite().to_json())},
      {"fixtures/e2e_fixture.csv", csv.str()},
      {"fixtures/e2e_manifest.json", dump(fixture.manifest)},
  };

  int stale = 0;
  for (const auto& [rel, content] : files) {
    const fs::path path = fs::path(out_dir) / rel;
    if (check) {
      if (!fs::exists(path) || read_file(path) != content) {
        std::cerr << "stale: " << path.string() << '\n';
        ++stale;
      }
      continue;
    }
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
      std::cerr << "cannot write " << path.string() << '\n';
      return 1;
    }
    std::cout << "wrote " << path.string() << '\n';
  }
  return stale == 0 ? 0 : 1;
}
