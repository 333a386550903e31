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

#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strclean {

struct GeoRecord {
  std::string country_code;
  /// Uppercased, spaces removed.
  std::string postal_code;
  double latitude = 0.0;
  double longitude = 0.0;

  bool operator==(const GeoRecord&) const = default;
};

struct EcefPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

namespace wgs84 {
inline constexpr double kSemiMajor = 6378137.0;
inline constexpr double kInverseFlattening = 298.257223563;
inline constexpr double kFlattening = 1.0 / kInverseFlattening;
inline constexpr double kSemiMinor = kSemiMajor * (1.0 - kFlattening);
inline constexpr double kEccentricitySquared = kFlattening * (2.0 - kFlattening);
}  // namespace wgs84

/// Uppercase with all whitespace removed.
std::string normalize_postal_code(std::string_view zip);

/// Immutable postal-code index. Each key maps to one record per country.
class GeoTable {
 public:
  const std::vector<GeoRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  std::size_t skipped_lines() const { return skipped_lines_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Records for a normalized code sorted by country, or nullptr.
  const std::vector<std::size_t>* lookup(std::string_view normalized) const;

  /// Tab-separated: country_code, postal_code, latitude, longitude.
  /// Blank and '#' lines are ignored; malformed lines are counted and skipped.
  static GeoTable parse(std::istream& in);

 private:
  std::vector<GeoRecord> records_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> index_;
  std::size_t skipped_lines_ = 0;
  std::vector<std::string> warnings_;
};

/// Throws IoError if unreadable and EmptyTable if no valid record remains.
GeoTable load_geo_table(const std::filesystem::path& path);

/// Resolves a column of zips in order. Ambiguous codes go to the country
/// hit most often so far, ties by country code.
class ZipResolver {
 public:
  explicit ZipResolver(const GeoTable& table) : table_(&table) {}
  std::optional<GeoRecord> lookup(std::string_view zip);
  const std::map<std::string, std::size_t>& country_hits() const { return hits_; }

 private:
  const GeoTable* table_;
  std::map<std::string, std::size_t> hits_;
};

std::optional<GeoRecord> zip_lookup(std::string_view zip, const GeoTable& table,
                                    const std::map<std::string, std::size_t>& country_hits = {});

/// Geodetic to ECEF at height 0. Throws OutOfRange outside [-90,90]x[-180,180].
EcefPoint latlon_to_ecef(double latitude, double longitude);

/// Great-circle distance on a sphere of radius 6371.0088 km.
double haversine_km(double lat1, double lon1, double lat2, double lon2);

/// Throws EmptyTable.
const GeoRecord& nearest_record(double latitude, double longitude, const GeoTable& table);

/// Online lookup hook. No implementation ships; the offline table is the default.
class RemoteGeocoder {
 public:
  virtual ~RemoteGeocoder() = default;
  virtual std::optional<GeoRecord> lookup(std::string_view zip) = 0;
};

}  // namespace strclean
