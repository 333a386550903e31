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

#include <cctype>
#include <cmath>
#include <string>

#include "strclean/error.hpp"
#include "strclean/processing.hpp"

namespace strclean {

namespace {

class CoordinateParser {
 public:
  explicit CoordinateParser(std::string_view s) : s_(s) {}

  std::vector<CoordinatePart> parse() {
    std::vector<CoordinatePart> parts;
    skip_spaces();
    while (pos_ < s_.size()) {
      parts.push_back(part());
      const std::size_t before = pos_;
      while (pos_ < s_.size() && (s_[pos_] == ',' || s_[pos_] == ';' || s_[pos_] == ' ')) ++pos_;
      if (pos_ < s_.size() && pos_ == before) fail();
    }
    if (parts.empty() || parts.size() > 2) fail();
    return parts;
  }

 private:
  [[noreturn]] void fail() const { throw ParseFailure("unparseable coordinate '" + std::string(s_) + "'"); }

  void skip_spaces() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  bool direction(Cardinal& out) {
    if (pos_ >= s_.size()) return false;
    switch (s_[pos_]) {
      case 'N': out = Cardinal::N; break;
      case 'E': out = Cardinal::E; break;
      case 'S': out = Cardinal::S; break;
      case 'W': out = Cardinal::W; break;
      default: return false;
    }
    ++pos_;
    return true;
  }

  double digits(std::size_t max_len) {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && pos_ - start < max_len && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail();
    return std::stod(std::string(s_.substr(start, pos_ - start)));
  }

  bool non_ascii_run() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && static_cast<unsigned char>(s_[pos_]) >= 0x80) ++pos_;
    return pos_ > start;
  }

  CoordinatePart part() {
    CoordinatePart p;
    Cardinal dir{};
    const bool leading = direction(dir);
    skip_spaces();
    p.degrees = digits(3);
    bool dms = false;
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == ':'))
      ++pos_;
    else if (non_ascii_run())
      dms = true;
    else
      fail();
    if (dms) skip_spaces();
    p.minutes = digits(2);
    if (dms) {
      if (pos_ < s_.size() && s_[pos_] == '\'')
        ++pos_;
      else if (!non_ascii_run())
        fail();
      skip_spaces();
    } else if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == ':')) {
      ++pos_;
    } else {
      fail();
    }
    p.seconds = digits(2);
    if (pos_ + 1 < s_.size() && s_[pos_] == '.' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      const std::size_t start = ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      p.seconds += std::stod("0." + std::string(s_.substr(start, pos_ - start)));
    }
    if (dms) {
      if (pos_ < s_.size() && s_[pos_] == '"')
        ++pos_;
      else
        non_ascii_run();
    }
    if (leading) {
      p.direction = dir;
      return p;
    }
    skip_spaces();
    if (!direction(dir)) fail();
    p.direction = dir;
    return p;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool is_latitude(Cardinal c) { return c == Cardinal::N || c == Cardinal::S; }

}  // namespace

double dms_to_decimal(double degrees, double minutes, double seconds, Cardinal direction) {
  if (!(degrees >= 0) || !(minutes >= 0 && minutes < 60) || !(seconds >= 0 && seconds < 60))
    throw OutOfRange("degree/minute/second component out of range");
  const double magnitude = degrees + minutes / 60.0 + seconds / 3600.0;
  if (magnitude > (is_latitude(direction) ? 90.0 : 180.0)) throw OutOfRange("coordinate magnitude out of range");
  return direction == Cardinal::S || direction == Cardinal::W ? -magnitude : magnitude;
}

std::vector<CoordinatePart> parse_coordinate(std::string_view text) { return CoordinateParser(text).parse(); }

ProcessedColumns process_coordinate(const Column& column, const GeoTable* geo) {
  ProcessedColumns out;
  const std::size_t n = column.size();
  std::vector<Cell> lat(n), lon(n);
  bool any_lat = false, any_lon = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Cell& cell = column.cells[i];
    if (cell.is_missing()) continue;
    try {
      for (const auto& part : parse_coordinate(cell.to_string())) {
        const double v = dms_to_decimal(part.degrees, part.minutes, part.seconds, part.direction);
        if (is_latitude(part.direction)) {
          lat[i] = Cell::number(v);
          any_lat = true;
        } else {
          lon[i] = Cell::number(v);
          any_lon = true;
        }
      }
    } catch (const Error& e) {
      lat[i] = lon[i] = Cell::missing();
      out.warnings.push_back(column.name + " row " + std::to_string(i) + ": " + e.what());
    }
  }
  if (any_lat || !any_lon) out.outputs.push_back({{column.name + "_lat", lat}, Directive::AlreadyNumeric});
  if (any_lon) out.outputs.push_back({{column.name + "_lon", lon}, Directive::AlreadyNumeric});
  if (!(any_lat && any_lon)) return out;

  std::vector<Cell> x(n), y(n), z(n), postal(n), country(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lat[i].is_missing() || lon[i].is_missing()) continue;
    const EcefPoint p = latlon_to_ecef(lat[i].as_number(), lon[i].as_number());
    x[i] = Cell::number(p.x);
    y[i] = Cell::number(p.y);
    z[i] = Cell::number(p.z);
    if (geo != nullptr && !geo->empty()) {
      const GeoRecord& r = nearest_record(lat[i].as_number(), lon[i].as_number(), *geo);
      postal[i] = Cell::text(r.postal_code);
      country[i] = Cell::text(r.country_code);
    }
  }
  out.outputs.push_back({{column.name + "_ecef_x", x}, Directive::AlreadyNumeric});
  out.outputs.push_back({{column.name + "_ecef_y", y}, Directive::AlreadyNumeric});
  out.outputs.push_back({{column.name + "_ecef_z", z}, Directive::AlreadyNumeric});
  if (geo != nullptr && !geo->empty()) {
    out.outputs.push_back({{column.name + "_postal", postal}, Directive::NominalEncode});
    out.outputs.push_back({{column.name + "_country", country}, Directive::NominalEncode});
  } else {
    out.warnings.push_back(column.name + ": no geo table, postal and country columns skipped");
  }
  return out;
}

}  // namespace strclean
