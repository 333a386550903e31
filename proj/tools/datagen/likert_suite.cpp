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
#include <vector>

#include "generators.hpp"
#include "rng.hpp"

namespace strclean::datagen {

namespace {

struct ScaleDef {
  const char* name;
  std::vector<std::string> order;
};

// Each order runs from the lowest to the highest response.
const std::vector<ScaleDef>& scale_defs() {
  static const std::vector<ScaleDef> defs = {
      {"agreement", {"strongly disagree", "disagree", "neutral", "agree", "strongly agree"}},
      {"agreement_7",
       {"strongly disagree", "disagree", "somewhat disagree", "neither agree nor disagree", "somewhat agree", "agree",
        "strongly agree"}},
      {"frequency", {"never", "rarely", "sometimes", "often", "always"}},
      {"quality", {"very poor", "poor", "fair", "good", "excellent"}},
      {"satisfaction", {"very dissatisfied", "dissatisfied", "neutral", "satisfied", "very satisfied"}},
      {"importance",
       {"not at all important", "slightly important", "moderately important", "very important",
        "extremely important"}},
      {"likelihood", {"very unlikely", "unlikely", "neutral", "likely", "very likely"}},
      {"difficulty", {"very difficult", "difficult", "neutral", "easy", "very easy"}},
      {"performance",
       {"unacceptable", "below expectations", "meets expectations", "exceeds expectations", "outstanding"}},
      {"health", {"poor", "fair", "good", "very good", "excellent"}},
      {"severity", {"none", "mild", "moderate", "severe"}},
      {"approval", {"strongly disapprove", "disapprove", "neutral", "approve", "strongly approve"}},
      {"happiness", {"very unhappy", "unhappy", "neutral", "happy", "very happy"}},
      {"interest", {"not interested", "slightly interested", "interested", "very interested"}},
      {"usefulness", {"useless", "slightly useful", "useful", "very useful", "extremely useful"}},
      {"comfort", {"very uncomfortable", "uncomfortable", "neutral", "comfortable", "very comfortable"}},
      {"recommendation", {"definitely not", "probably not", "not sure", "probably", "definitely"}},
      {"confidence", {"not confident", "somewhat confident", "confident", "very confident"}},
  };
  return defs;
}

}  // namespace

LikertSuite likert_suite() {
  Rng rng(0x11ce);
  LikertSuite suite;
  for (const auto& def : scale_defs()) {
    LikertScale scale;
    scale.name = def.name;
    scale.order = def.order;
    for (const auto& v : def.order) {
      const int copies = rng.between(3, 20);
      for (int i = 0; i < copies; ++i) scale.values.push_back(v);
    }
    rng.shuffle(scale.values);
    suite.scales.push_back(std::move(scale));
  }
  return suite;
}

}  // namespace strclean::datagen
