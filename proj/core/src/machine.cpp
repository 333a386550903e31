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
#include <limits>

#include "regex_compiler.hpp"
#include "strclean/error.hpp"
#include "strclean/pfsm.hpp"

namespace strclean {

namespace {

constexpr double kWeightTolerance = 1e-9;

}  // namespace

MachineSpec MachineSpec::compile(StringFeatureKind kind, std::string pattern, bool case_sensitive) {
  const detail::Dfa dfa = detail::compile_pattern(pattern, case_sensitive);
  std::vector<MachineState> states(dfa.next.size());
  for (std::size_t d = 0; d < dfa.next.size(); ++d) {
    states[d].accepting = dfa.accepting[d];
    std::map<std::int32_t, SymbolSet> by_target;
    std::size_t legal = 0;
    for (std::size_t sym = 0; sym < dfa.next[d].size(); ++sym) {
      const auto t = dfa.next[d][sym];
      if (t < 0) continue;
      by_target[t].set(sym);
      ++legal;
    }
    for (const auto& [target, symbols] : by_target) {
      states[d].transitions.push_back(
          {static_cast<std::size_t>(target), symbols,
           static_cast<double>(symbols.count()) / static_cast<double>(legal)});
    }
  }
  MachineSpec spec;
  spec.kind_ = kind;
  spec.pattern_ = std::move(pattern);
  spec.case_sensitive_ = case_sensitive;
  spec.states_ = std::move(states);
  spec.build_tables();
  return spec;
}

MachineSpec MachineSpec::from_graph(StringFeatureKind kind, std::string pattern, bool case_sensitive,
                                    std::vector<MachineState> states) {
  if (states.empty()) throw InvalidSpec("machine has no states");
  for (std::size_t s = 0; s < states.size(); ++s) {
    SymbolSet seen;
    double total = 0.0;
    for (const auto& t : states[s].transitions) {
      if (t.target >= states.size()) {
        throw InvalidSpec("state " + std::to_string(s) + " has a transition to unknown state");
      }
      if (t.symbols.none()) throw InvalidSpec("state " + std::to_string(s) + " has an empty label");
      if ((seen & t.symbols).any()) {
        throw InvalidSpec("state " + std::to_string(s) + " is not deterministic");
      }
      if (!(t.weight > 0.0)) throw InvalidSpec("state " + std::to_string(s) + " has a non-positive weight");
      seen |= t.symbols;
      total += t.weight;
    }
    if (!states[s].transitions.empty() && std::abs(total - 1.0) > kWeightTolerance) {
      throw InvalidSpec("weights of state " + std::to_string(s) + " sum to " + std::to_string(total));
    }
  }
  MachineSpec spec;
  spec.kind_ = kind;
  spec.pattern_ = std::move(pattern);
  spec.case_sensitive_ = case_sensitive;
  spec.states_ = std::move(states);
  spec.build_tables();
  return spec;
}

void MachineSpec::build_tables() {
  const std::size_t n = states_.size();
  next_.assign(n * alphabet::kSize, -1);
  log_emission_.assign(n * alphabet::kSize, -std::numeric_limits<double>::infinity());
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& t : states_[s].transitions) {
      const double per_symbol = std::log(t.weight / static_cast<double>(t.symbols.count()));
      for (std::size_t sym = 0; sym < alphabet::kSize; ++sym) {
        if (!t.symbols.test(sym)) continue;
        next_[s * alphabet::kSize + sym] = static_cast<std::int32_t>(t.target);
        log_emission_[s * alphabet::kSize + sym] = per_symbol;
      }
    }
  }
}

double MachineSpec::logprob(std::string_view value) const {
  constexpr double kReject = -std::numeric_limits<double>::infinity();
  std::size_t state = 0;
  double lp = 0.0;
  for (int sym : alphabet::symbolize(value, !case_sensitive_)) {
    const std::size_t idx = state * alphabet::kSize + static_cast<std::size_t>(sym);
    const auto next = next_[idx];
    if (next < 0) return kReject;
    lp += log_emission_[idx];
    state = static_cast<std::size_t>(next);
  }
  return states_[state].accepting ? lp : kReject;
}

bool MachineSpec::accepts(std::string_view value) const { return std::isfinite(logprob(value)); }

double value_logprob(const MachineSpec& machine, std::string_view value) { return machine.logprob(value); }

nlohmann::json MachineSpec::to_json() const {
  nlohmann::json states = nlohmann::json::array();
  for (const auto& st : states_) {
    nlohmann::json transitions = nlohmann::json::array();
    for (const auto& t : st.transitions) {
      transitions.push_back(
          {{"target", t.target}, {"symbols", detail::symbols_to_class(t.symbols)}, {"weight", t.weight}});
    }
    states.push_back({{"accepting", st.accepting}, {"transitions", std::move(transitions)}});
  }
  return {{"kind", std::string(kind_name(kind_))},
          {"pattern", pattern_},
          {"case_sensitive", case_sensitive_},
          {"states", std::move(states)}};
}

MachineSpec MachineSpec::from_json(const nlohmann::json& doc) {
  try {
    const auto kind = parse_kind(doc.at("kind").get<std::string>());
    if (!kind) throw InvalidSpec("unknown machine kind '" + doc.at("kind").get<std::string>() + "'");
    std::string pattern = doc.value("pattern", std::string());
    const bool case_sensitive = doc.value("case_sensitive", true);
    if (!doc.contains("states")) {
      if (pattern.empty()) throw InvalidSpec("machine needs either states or a pattern");
      return compile(*kind, std::move(pattern), case_sensitive);
    }
    std::vector<MachineState> states;
    for (const auto& js : doc.at("states")) {
      MachineState st;
      st.accepting = js.at("accepting").get<bool>();
      for (const auto& jt : js.at("transitions")) {
        st.transitions.push_back({jt.at("target").get<std::size_t>(),
                                  detail::class_to_symbols(jt.at("symbols").get<std::string>()),
                                  jt.at("weight").get<double>()});
      }
      states.push_back(std::move(st));
    }
    return from_graph(*kind, std::move(pattern), case_sensitive, std::move(states));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("malformed machine JSON: ") + e.what());
  }
}

}  // namespace strclean
