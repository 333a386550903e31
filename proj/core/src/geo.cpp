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

#include "strclean/geo.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>
#include <tuple>

#include "strclean/error.hpp"
#include "strclean/text.hpp"

namespace strclean {

namespace {

constexpr double kEarthRadiusKm = 6371.0088;

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

bool in_bounds(double lat, double lon) { return lat >= -90.0 && lat <= 90.0 && lon >= -180.0 && lon <= 180.0; }

double radians(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

std::string normalize_postal_code(std::string_view zip) {
  std::string out;
  for (char c : zip)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return out;
}

const std::vector<std::size_t>* GeoTable::lookup(std::string_view normalized) const {
  auto it = index_.find(normalized);
  return it == index_.end() ? nullptr : &it->second;
}

GeoTable GeoTable::parse(std::istream& in) {
  GeoTable table;
  std::map<std::pair<std::string, std::string>, std::size_t> position;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line).front() == '#') continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto tab = rest.find('\t');
      fields.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    GeoRecord record;
    bool ok = fields.size() == 4;
    if (ok) {
      record.country_code = to_upper(trim(fields[0]));
      record.postal_code = normalize_postal_code(fields[1]);
      ok = record.country_code.size() == 2 &&
           std::all_of(record.country_code.begin(), record.country_code.end(),
                       [](char c) { return c >= 'A' && c <= 'Z'; }) &&
           !record.postal_code.empty() && parse_double(fields[2], record.latitude) &&
           parse_double(fields[3], record.longitude) && in_bounds(record.latitude, record.longitude);
    }
    if (!ok) {
      ++table.skipped_lines_;
      continue;
    }
    const auto key = std::make_pair(record.country_code, record.postal_code);
    auto it = position.find(key);
    if (it != position.end()) {
      table.warnings_.push_back("line " + std::to_string(line_no) + ": duplicate " + record.country_code + " " +
                                record.postal_code + " replaces earlier record");
      table.records_[it->second] = std::move(record);
      continue;
    }
    position.emplace(key, table.records_.size());
    table.records_.push_back(std::move(record));
  }
  for (std::size_t i = 0; i < table.records_.size(); ++i) table.index_[table.records_[i].postal_code].push_back(i);
  for (auto& [key, ids] : table.index_)
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      return table.records_[a].country_code < table.records_[b].country_code;
    });
  return table;
}

GeoTable load_geo_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open geo table " + path.string());
  GeoTable table = GeoTable::parse(in);
  if (table.empty()) throw EmptyTable("geo table " + path.string() + " has no valid records");
  return table;
}

std::optional<GeoRecord> zip_lookup(std::string_view zip, const GeoTable& table,
                                    const std::map<std::string, std::size_t>& country_hits) {
  const std::string key = normalize_postal_code(zip);
  const auto* ids = table.lookup(key);
  // Outward-code tables hold "SW1A", "M5V" or "1012"; on a miss drop the
  // inward part (three characters in GB and CA, two letters in NL).
  for (std::size_t cut : {std::size_t{3}, std::size_t{2}}) {
    if (ids != nullptr) break;
    if (key.size() >= cut + 2) ids = table.lookup(key.substr(0, key.size() - cut));
  }
  if (ids == nullptr || ids->empty()) return std::nullopt;
  std::size_t best = ids->front();
  std::size_t best_hits = 0;
  for (auto id : *ids) {
    auto it = country_hits.find(table.records()[id].country_code);
    const std::size_t hits = it == country_hits.end() ? 0 : it->second;
    // ids are in country order, so strict > keeps the earliest on ties.
    if (hits > best_hits) {
      best = id;
      best_hits = hits;
    }
  }
  return table.records()[best];
}

std::optional<GeoRecord> ZipResolver::lookup(std::string_view zip) {
  auto record = zip_lookup(zip, *table_, hits_);
  if (record) ++hits_[record->country_code];
  return record;
}

EcefPoint latlon_to_ecef(double latitude, double longitude) {
  if (!std::isfinite(latitude) || !std::isfinite(longitude) || !in_bounds(latitude, longitude))
    throw OutOfRange("latitude/longitude out of range");
  const double phi = radians(latitude);
  const double lambda = radians(longitude);
  const double s = std::sin(phi);
  const double n = wgs84::kSemiMajor / std::sqrt(1.0 - wgs84::kEccentricitySquared * s * s);
  return {n * std::cos(phi) * std::cos(lambda), n * std::cos(phi) * std::sin(lambda),
          n * (1.0 - wgs84::kEccentricitySquared) * s};
}

double haversine_km(double lat1, double lon1, double lat2, double lon2) {
  const double dphi = radians(lat2 - lat1);
  const double dlambda = radians(lon2 - lon1);
  const double h = std::sin(dphi / 2) * std::sin(dphi / 2) +
                   std::cos(radians(lat1)) * std::cos(radians(lat2)) * std::sin(dlambda / 2) * std::sin(dlambda / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0)));
}

const GeoRecord& nearest_record(double latitude, double longitude, const GeoTable& table) {
  if (table.empty()) throw EmptyTable("geo table is empty");
  const GeoRecord* best = nullptr;
  double best_d = 0;
  for (const auto& r : table.records()) {
    const double d = haversine_km(latitude, longitude, r.latitude, r.longitude);
    if (best == nullptr || d < best_d ||
        (d == best_d && std::tie(r.country_code, r.postal_code) < std::tie(best->country_code, best->postal_code))) {
      best = &r;
      best_d = d;
    }
  }
  return *best;
}

}  // namespace strclean
