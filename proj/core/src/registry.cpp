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

#include "strclean/error.hpp"
#include "strclean/pfsm.hpp"

namespace strclean {

namespace {

struct KindInfo {
  StringFeatureKind kind;
  std::string_view name;
};

constexpr std::array<KindInfo, 14> kKinds = {{
    {StringFeatureKind::Coordinate, "Coordinate"},
    {StringFeatureKind::Day, "Day"},
    {StringFeatureKind::Email, "Email"},
    {StringFeatureKind::Filepath, "Filepath"},
    {StringFeatureKind::Month, "Month"},
    {StringFeatureKind::NumericalString, "NumericalString"},
    {StringFeatureKind::Sentence, "Sentence"},
    {StringFeatureKind::Url, "Url"},
    {StringFeatureKind::ZipCode, "ZipCode"},
    {StringFeatureKind::Standard, "Standard"},
    {StringFeatureKind::BaseInteger, "BaseInteger"},
    {StringFeatureKind::BaseFloat, "BaseFloat"},
    {StringFeatureKind::MissingType, "MissingType"},
    {StringFeatureKind::AnomalyType, "AnomalyType"},
}};

// Degrees take up to three digits so that longitudes past 99 are legal.
constexpr std::string_view kCoordinate =
    R"re(([NESW] ?([0-9]{1,3}[.:][0-9]{1,2}[.:][0-9]{1,2}(\.[0-9]+)?|[0-9]{1,3}\o ?[0-9]{1,2}' ?[0-9]{1,2}(\.[0-9]+)?"?)|([0-9]{1,3}[.:][0-9]{1,2}[.:][0-9]{1,2}(\.[0-9]+)?|[0-9]{1,3}\o ?[0-9]{1,2}' ?[0-9]{1,2}(\.[0-9]+)?"?) ?[NESW])((, ?| |; ?)([NESW] ?([0-9]{1,3}[.:][0-9]{1,2}[.:][0-9]{1,2}(\.[0-9]+)?|[0-9]{1,3}\o ?[0-9]{1,2}' ?[0-9]{1,2}(\.[0-9]+)?"?)|([0-9]{1,3}[.:][0-9]{1,2}[.:][0-9]{1,2}(\.[0-9]+)?|[0-9]{1,3}\o ?[0-9]{1,2}' ?[0-9]{1,2}(\.[0-9]+)?"?) ?[NESW]))?)re";

// Any prefix of at least two letters of a day name, optional full stop.
constexpr std::string_view kDay =
    R"re((mo(n(d(a(y)?)?)?)?|tu(e(s(d(a(y)?)?)?)?)?|we(d(n(e(s(d(a(y)?)?)?)?)?)?)?|th(u(r(s(d(a(y)?)?)?)?)?)?|fr(i(d(a(y)?)?)?)?|sa(t(u(r(d(a(y)?)?)?)?)?)?|su(n(d(a(y)?)?)?)?)\.?)re";

constexpr std::string_view kEmail = R"re([A-Za-z0-9._%+\-]+@([A-Za-z0-9\-]+\.)+[A-Za-z]{2,})re";

constexpr std::string_view kFilepath =
    R"re(([A-Za-z]:[/\\]|\.+[/\\]|~[/\\]|[/\\]|[^\\/:*?"<>|]+[/\\])([^\\/:*?"<>|]+[/\\])*[^\\/:*?"<>|]*)re";

constexpr std::string_view kMonth =
    R"re(([0-9]{1,2}(st|nd|rd|th)?(,? |-))?(jan(u(a(r(y)?)?)?)?|feb(r(u(a(r(y)?)?)?)?)?|mar(c(h)?)?|apr(i(l)?)?|may|jun(e)?|jul(y)?|aug(u(s(t)?)?)?|sep(t(e(m(b(e(r)?)?)?)?)?)?|oct(o(b(e(r)?)?)?)?|nov(e(m(b(e(r)?)?)?)?)?|dec(e(m(b(e(r)?)?)?)?)?)\.?((,? |-)[0-9]{1,2}(st|nd|rd|th)?)?((,? |-)([0-9]{1,4}|'[0-9]{2}))?)re";

constexpr std::string_view kNumerical =
    R"re([<>+$%=]*[0-9]+(,[0-9]{3})*(\.[0-9]+)?( ?[\-+_/:;&'] ?| | ?to ?)[<>+$%=]*[0-9]+(,[0-9]{3})*(\.[0-9]+)?[<>+$%=]*|(less than|lower than|under|below|greater than|higher than|over|above)[ \-]?[<>+$%=]*[0-9]+(,[0-9]{3})*(\.[0-9]+)?[<>+$%=]*|[<>+$%=]+[0-9]+(,[0-9]{3})*(\.[0-9]+)?[<>+$%=]*|[0-9]+(,[0-9]{3})*(\.[0-9]+)?[<>+$%=]+)re";

// At least six words separated by spaces.
constexpr std::string_view kSentence =
    R"re([A-Za-z0-9.,;:!?'"()&/$%+\-\o]+( +[A-Za-z0-9.,;:!?'"()&/$%+\-\o]+){5,} *)re";

constexpr std::string_view kUrl =
    R"re(([a-z][a-z0-9+.\-]*://)?([a-z0-9\-]+\.){1,3}[a-z]{2,3}(:[0-9]{1,5})?(/[a-z0-9._~%!$&'()*+,;=:@?#\-]*)*)re";

// UK, Dutch, Canadian and Bermudan layouts; purely numeric codes are
// indistinguishable from integers and are left out.
constexpr std::string_view kZipCode =
    R"re([A-Z]{1,2}[0-9][A-Z0-9]? ?[0-9][A-Z]{2}|[1-9][0-9]{3} ?[A-Z]{2}|[A-Z][0-9][A-Z] ?[0-9][A-Z][0-9]|[A-Z]{2} ?[0-9]{2})re";

constexpr std::string_view kBaseInteger = R"re([+\-]?[0-9]+)re";
constexpr std::string_view kBaseFloat = R"re([+\-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+\-]?[0-9]+)?)re";
constexpr std::string_view kMissingType = R"re(na|n/a|null|nan|\?)re";
constexpr std::string_view kAnything = R"re(.+)re";

}  // namespace

std::string_view kind_name(StringFeatureKind kind) {
  return kKinds[static_cast<std::size_t>(kind)].name;
}

std::optional<StringFeatureKind> parse_kind(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

bool is_feature_kind(StringFeatureKind kind) {
  return static_cast<int>(kind) < static_cast<int>(StringFeatureKind::Standard);
}

bool is_numeric_kind(StringFeatureKind kind) {
  return kind == StringFeatureKind::BaseInteger || kind == StringFeatureKind::BaseFloat;
}

std::string_view default_pattern(StringFeatureKind kind) {
  switch (kind) {
    case StringFeatureKind::Coordinate: return kCoordinate;
    case StringFeatureKind::Day: return kDay;
    case StringFeatureKind::Email: return kEmail;
    case StringFeatureKind::Filepath: return kFilepath;
    case StringFeatureKind::Month: return kMonth;
    case StringFeatureKind::NumericalString: return kNumerical;
    case StringFeatureKind::Sentence: return kSentence;
    case StringFeatureKind::Url: return kUrl;
    case StringFeatureKind::ZipCode: return kZipCode;
    case StringFeatureKind::BaseInteger: return kBaseInteger;
    case StringFeatureKind::BaseFloat: return kBaseFloat;
    case StringFeatureKind::MissingType: return kMissingType;
    case StringFeatureKind::Standard:
    case StringFeatureKind::AnomalyType: return kAnything;
  }
  return kAnything;
}

bool default_case_sensitive(StringFeatureKind kind) {
  switch (kind) {
    case StringFeatureKind::Day:
    case StringFeatureKind::Month:
    case StringFeatureKind::NumericalString:
    case StringFeatureKind::Url:
    case StringFeatureKind::MissingType:
      return false;
    default:
      return true;
  }
}

bool MachineToggles::is_enabled(StringFeatureKind kind) const {
  auto it = enabled.find(kind);
  return it == enabled.end() || it->second;
}

MachineToggles& MachineToggles::disable(StringFeatureKind kind) {
  enabled[kind] = false;
  return *this;
}

MachineToggles MachineToggles::from_json(const nlohmann::json& doc) {
  MachineToggles toggles;
  if (doc.is_null()) return toggles;
  if (!doc.is_object()) throw InvalidSpec("machine toggles must be an object");
  for (const auto& [name, value] : doc.items()) {
    const auto kind = parse_kind(name);
    if (!kind || !is_feature_kind(*kind)) throw InvalidSpec("unknown feature machine '" + name + "'");
    toggles.enabled[*kind] = value.get<bool>();
  }
  return toggles;
}

Registry::Registry(std::vector<MachineSpec> machines) : machines_(std::move(machines)) {
  std::stable_sort(machines_.begin(), machines_.end(), [](const MachineSpec& a, const MachineSpec& b) {
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind());
  });
  for (std::size_t i = 1; i < machines_.size(); ++i) {
    if (machines_[i].kind() == machines_[i - 1].kind()) {
      throw InvalidSpec("duplicate machine for " + std::string(kind_name(machines_[i].kind())));
    }
  }
  for (auto base : {StringFeatureKind::BaseInteger, StringFeatureKind::BaseFloat,
                    StringFeatureKind::MissingType, StringFeatureKind::AnomalyType}) {
    if (find(base) == nullptr) {
      throw InvalidSpec("registry lacks the " + std::string(kind_name(base)) + " machine");
    }
  }
}

const MachineSpec* Registry::find(StringFeatureKind kind) const {
  for (const auto& m : machines_) {
    if (m.kind() == kind) return &m;
  }
  return nullptr;
}

void Registry::replace(MachineSpec machine) {
  for (auto& m : machines_) {
    if (m.kind() == machine.kind()) {
      m = std::move(machine);
      return;
    }
  }
  if (machine.kind() == StringFeatureKind::Standard) {
    throw InvalidSpec("Standard is the fallback and has no machine");
  }
  machines_.push_back(std::move(machine));
  *this = Registry(std::move(machines_));
}

nlohmann::json Registry::to_json() const {
  nlohmann::json machines = nlohmann::json::array();
  for (const auto& m : machines_) machines.push_back(m.to_json());
  return {{"version", 1}, {"machines", std::move(machines)}};
}

Registry Registry::from_json(const nlohmann::json& doc) {
  std::vector<MachineSpec> machines;
  try {
    for (const auto& jm : doc.at("machines")) machines.push_back(MachineSpec::from_json(jm));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("malformed registry JSON: ") + e.what());
  }
  return Registry(std::move(machines));
}

Registry build_registry(const MachineToggles& toggles) {
  std::vector<MachineSpec> machines;
  for (auto kind : kFeatureKinds) {
    if (!toggles.is_enabled(kind)) continue;
    machines.push_back(
        MachineSpec::compile(kind, std::string(default_pattern(kind)), default_case_sensitive(kind)));
  }
  for (auto kind : {StringFeatureKind::BaseInteger, StringFeatureKind::BaseFloat,
                    StringFeatureKind::MissingType, StringFeatureKind::AnomalyType}) {
    machines.push_back(
        MachineSpec::compile(kind, std::string(default_pattern(kind)), default_case_sensitive(kind)));
  }
  return Registry(std::move(machines));
}

}  // namespace strclean
