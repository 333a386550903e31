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

#include <charconv>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "rng.hpp"

namespace strclean::datagen {

namespace {

struct Anchor {
  const char* country;
  const char* outward;
  double latitude;
  double longitude;
};

// Approximate centroids of real outward codes (GB districts, Canadian
// forward sortation areas, Dutch four-digit areas, Bermudan parishes).
constexpr Anchor kAnchors[] = {
    {"GB", "SW1A", 51.5010, -0.1416}, {"GB", "EC1A", 51.5200, -0.0977}, {"GB", "W1A", 51.5185, -0.1437},
    {"GB", "M1", 53.4808, -2.2374},   {"GB", "B1", 52.4796, -1.9026},   {"GB", "L1", 53.4033, -2.9820},
    {"GB", "LS1", 53.7965, -1.5478},  {"GB", "G1", 55.8609, -4.2514},   {"GB", "EH1", 55.9500, -3.1883},
    {"GB", "CF10", 51.4816, -3.1791}, {"GB", "BS1", 51.4545, -2.5879},  {"GB", "NE1", 54.9738, -1.6132},
    {"GB", "OX1", 51.7520, -1.2577},  {"GB", "CB2", 52.2043, 0.1218},   {"GB", "BT1", 54.5997, -5.9287},
    {"GB", "S1", 53.3811, -1.4701},   {"GB", "NG1", 52.9536, -1.1505},  {"GB", "AB10", 57.1437, -2.0981},
    {"GB", "YO1", 53.9600, -1.0873},  {"GB", "BN1", 50.8225, -0.1372},
    {"NL", "1012", 52.3731, 4.8922},  {"NL", "3011", 51.9225, 4.4792},  {"NL", "2511", 52.0799, 4.3113},
    {"NL", "3511", 52.0907, 5.1214},  {"NL", "5611", 51.4416, 5.4697},  {"NL", "5612", 51.4481, 5.4903},
    {"NL", "9711", 53.2194, 6.5665},  {"NL", "6511", 51.8426, 5.8590},  {"NL", "7511", 52.2215, 6.8937},
    {"NL", "2311", 52.1601, 4.4970},  {"NL", "4811", 51.5890, 4.7760},  {"NL", "6211", 50.8514, 5.6910},
    {"NL", "8011", 52.5168, 6.0830},  {"NL", "6811", 51.9851, 5.8987},  {"NL", "5211", 51.6978, 5.3037},
    {"CA", "M5V", 43.6426, -79.3871}, {"CA", "H3A", 45.5048, -73.5772}, {"CA", "V6B", 49.2781, -123.1120},
    {"CA", "K1P", 45.4215, -75.6972}, {"CA", "T2P", 51.0486, -114.0708}, {"CA", "T5J", 53.5444, -113.4909},
    {"CA", "R3C", 49.8951, -97.1384}, {"CA", "G1R", 46.8139, -71.2080}, {"CA", "B3H", 44.6369, -63.5848},
    {"CA", "S4P", 50.4452, -104.6189}, {"CA", "E1C", 46.0878, -64.7782}, {"CA", "A1C", 47.5615, -52.7126},
    {"CA", "V8W", 48.4284, -123.3656}, {"CA", "L8P", 43.2557, -79.8711}, {"CA", "N6A", 42.9849, -81.2453},
};

struct Parish {
  const char* prefix;
  double latitude;
  double longitude;
};

constexpr Parish kParishes[] = {
    {"HM", 32.2949, -64.7830}, {"DV", 32.3003, -64.7519}, {"PG", 32.2804, -64.7786},
    {"SN", 32.2540, -64.8282}, {"WK", 32.2650, -64.8080}, {"SB", 32.2990, -64.8700},
    {"MA", 32.3120, -64.8790}, {"GE", 32.3810, -64.6770}, {"FL", 32.3220, -64.7390},
    {"CR", 32.3400, -64.7300},
};

constexpr std::string_view kGbInward = "ABDEFGHJLNPQRSTUWXYZ";
constexpr std::string_view kCaLetters = "ABCEGHJKLMNPRSTVWXYZ";
constexpr std::string_view kNlLetters = "ABCDEGHJKLMNPRSTVWXZ";

char letter(Rng& rng, std::string_view alphabet) { return alphabet[rng.below(alphabet.size())]; }
char digit(Rng& rng) { return static_cast<char>('0' + rng.below(10)); }

std::string full_code(Rng& rng, const Anchor& a) {
  const std::string country = a.country;
  if (country == "GB") return std::string(a.outward) + ' ' + digit(rng) + letter(rng, kGbInward) + letter(rng, kGbInward);
  if (country == "CA") return std::string(a.outward) + ' ' + digit(rng) + letter(rng, kCaLetters) + digit(rng);
  return std::string(a.outward) + ' ' + letter(rng, kNlLetters) + letter(rng, kNlLetters);
}

void append_fixed(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 5);
  (void)ec;
  out.append(buf, ptr);
}

}  // namespace

std::vector<GeoRow> geo_rows() {
  Rng rng(0x6e0);
  std::vector<GeoRow> rows;
  std::set<std::string> seen;
  for (const auto& a : kAnchors) {
    rows.push_back({a.country, a.outward, a.latitude, a.longitude, true});
    for (int i = 0; i < 4; ++i) {
      std::string code;
      do code = full_code(rng, a);
      while (!seen.insert(code).second);
      const double lat = a.latitude + rng.uniform(-0.01, 0.01);
      const double lon = a.longitude + rng.uniform(-0.015, 0.015);
      rows.push_back({a.country, std::move(code), lat, lon, false});
    }
  }
  for (const auto& p : kParishes) {
    for (int i = 0; i < 4; ++i) {
      std::string code;
      do code = std::string(p.prefix) + ' ' + digit(rng) + static_cast<char>('1' + rng.below(9));
      while (!seen.insert(code).second);
      rows.push_back({"BM", std::move(code), p.latitude + rng.uniform(-0.004, 0.004),
                      p.longitude + rng.uniform(-0.004, 0.004), false});
    }
  }
  return rows;
}

std::string geo_tsv(const std::vector<GeoRow>& rows) {
  std::string out = "# country\tpostal_code\tlatitude\tlongitude\n";
  for (const auto& r : rows) {
    out += r.country + '\t' + r.postal_code + '\t';
    append_fixed(out, r.latitude);
    out += '\t';
    append_fixed(out, r.longitude);
    out += '\n';
  }
  return out;
}

}  // namespace strclean::datagen
