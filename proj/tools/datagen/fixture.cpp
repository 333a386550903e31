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
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "rng.hpp"
#include "vocab.hpp"

namespace strclean::datagen {

namespace {

constexpr std::size_t kRows = 500;

struct Planted {
  std::string column;
  std::size_t row;
  std::string value;
  std::string expected;
};

std::string dms(double value, char positive, char negative) {
  const char dir = value < 0 ? negative : positive;
  value = std::fabs(value);
  const int deg = static_cast<int>(value);
  const double minutes = (value - deg) * 60.0;
  const int min = static_cast<int>(minutes);
  // Tenths of a second, kept below 60.0 so the field never rolls over.
  const int tenths = std::min(599, static_cast<int>(std::lround((minutes - min) * 600.0)));
  char buf[48];
  std::snprintf(buf, sizeof buf, "%d\xC2\xB0%d'%d.%d\"%c", deg, min, tenths / 10, tenths % 10, dir);
  return buf;
}

std::string with_commas(int v) {
  std::string digits = std::to_string(v);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

Cell text_or_missing(Rng& rng, std::string value, double p_missing) {
  if (!rng.chance(p_missing)) return Cell::text(std::move(value));
  return rng.chance(0.5) ? Cell::missing() : Cell::text("NA");
}

std::string review(Rng& r) {
  return r.pick(vocab::kSubjects) + ' ' + r.pick(vocab::kVerbs) + ' ' + r.pick(vocab::kAdjectives) + ' ' +
         r.pick(vocab::kQualities) + ' ' + r.pick(vocab::kTails);
}

}  // namespace

Fixture e2e_fixture(const std::vector<GeoRow>& geo) {
  Rng rng(0xe2e);
  std::vector<const GeoRow*> full_codes;
  for (const auto& g : geo)
    if (!g.outward) full_codes.push_back(&g);

  const vocab::Words cities = {"Amsterdam", "Rotterdam", "Utrecht", "Eindhoven", "Groningen", "Tilburg", "Breda", "Nijmegen"};
  const std::vector<double> city_weights = {0.22, 0.18, 0.15, 0.13, 0.1, 0.08, 0.07, 0.07};
  const vocab::Words satisfaction = {"Very dissatisfied", "Dissatisfied", "Neutral", "Satisfied", "Very satisfied"};
  const std::vector<double> satisfaction_weights = {0.12, 0.18, 0.25, 0.27, 0.18};
  std::vector<std::string> customers;
  for (int i = 0; i < 160; ++i) customers.push_back(rng.pick(vocab::kFirstNames) + ' ' + rng.pick(vocab::kSurnames));

  std::vector<Column> cols;
  auto column = [&cols](const char* name) -> Column& {
    cols.push_back(Column{name, {}});
    return cols.back();
  };
  column("id");
  column("age");
  column("income");
  column("location");
  column("visit_day");
  column("contact");
  column("attachment");
  column("signup_month");
  column("salary_band");
  column("review");
  column("homepage");
  column("postcode");
  column("city");
  column("satisfaction");
  column("product");
  column("customer");

  for (std::size_t row = 0; row < kRows; ++row) {
    std::size_t c = 0;
    const int age = rng.between(18, 80);
    cols[c++].cells.push_back(Cell::integer(static_cast<std::int64_t>(row + 1)));
    cols[c++].cells.push_back(rng.chance(0.05) ? Cell::missing() : Cell::integer(age));
    // Income goes missing far more often for older respondents.
    const double income = std::round(18000.0 + 650.0 * age + rng.uniform(-6000.0, 6000.0));
    cols[c++].cells.push_back(rng.chance(age > 60 ? 0.35 : 0.03) ? Cell::missing() : Cell::number(income));

    const GeoRow& place = *full_codes[rng.below(full_codes.size())];
    const double lat = place.latitude + rng.uniform(-0.05, 0.05);
    const double lon = place.longitude + rng.uniform(-0.05, 0.05);
    cols[c++].cells.push_back(text_or_missing(rng, dms(lat, 'N', 'S') + ' ' + dms(lon, 'E', 'W'), 0.03));
    cols[c++].cells.push_back(text_or_missing(rng, rng.chance(0.7) ? rng.pick(vocab::kDaysShort) : rng.pick(vocab::kDaysFull), 0.02));

    const std::string& person = customers[rng.below(customers.size())];
    std::string local = lower(person);
    for (char& ch : local)
      if (ch == ' ') ch = '.';
    cols[c++].cells.push_back(text_or_missing(rng, local + '@' + rng.pick(vocab::kMailDomains), 0.02));
    char scan[64];
    std::snprintf(scan, sizeof scan, "C:/data/scans/%s/%08d_%03d.png", rng.chance(0.5) ? "train" : "test",
                  rng.between(1, 30000), rng.between(0, 20));
    cols[c++].cells.push_back(text_or_missing(rng, scan, 0.02));
    const std::string month = rng.chance(0.5)
                                  ? vocab::kMonthsShort[rng.below(12)] + ' ' + std::to_string(rng.between(2015, 2023))
                                  : vocab::kMonthsFull[rng.below(12)] + ' ' + std::to_string(rng.between(1, 28)) + ", " +
                                        std::to_string(rng.between(2015, 2023));
    cols[c++].cells.push_back(text_or_missing(rng, month, 0.02));
    const int band = std::clamp(static_cast<int>(income / 10000.0), 2, 9) * 10000;
    cols[c++].cells.push_back(text_or_missing(rng, with_commas(band) + '-' + with_commas(band + 10000), 0.02));
    cols[c++].cells.push_back(text_or_missing(rng, review(rng), 0.04));
    cols[c++].cells.push_back(text_or_missing(rng, "https://" + rng.pick(vocab::kWebHosts) + "/u/" + std::to_string(row + 1), 0.02));
    std::string postcode = place.postal_code;
    if (rng.chance(0.02)) postcode = "ZZ9 9ZZ";  // well formed, absent from the table
    cols[c++].cells.push_back(text_or_missing(rng, postcode, 0.03));
    cols[c++].cells.push_back(text_or_missing(rng, cities[rng.weighted(city_weights)], 0.03));
    cols[c++].cells.push_back(text_or_missing(rng, satisfaction[rng.weighted(satisfaction_weights)], 0.03));
    cols[c++].cells.push_back(text_or_missing(rng, rng.pick(vocab::kProductCategories), 0.02));
    cols[c++].cells.push_back(text_or_missing(rng, person, 0.02));
  }

  Table table(kRows);
  for (auto& col : cols) table.add_column(std::move(col));

  std::set<std::size_t> used;
  auto fresh_row = [&]() {
    std::size_t r;
    do r = rng.below(kRows);
    while (!used.insert(r).second);
    return r;
  };
  auto plant = [&](const std::string& column, Cell cell, std::size_t row) {
    table.column(*table.index_of(column)).cells[row] = std::move(cell);
  };

  const std::vector<Planted> typo_defs = {
      {"city", 0, "Amsterdm", "Amsterdam"},
      {"city", 0, "Rotterdan", "Rotterdam"},
      {"city", 0, "Utrech", "Utrecht"},
      {"city", 0, "Eindhovn", "Eindhoven"},
      {"satisfaction", 0, "Satisfed", "Satisfied"},
      {"satisfaction", 0, "Neutrl", "Neutral"},
      {"satisfaction", 0, "Very satisfed", "Very satisfied"},
      {"satisfaction", 0, "Disatisfied", "Dissatisfied"},
  };
  nlohmann::json typos = nlohmann::json::array();
  for (auto t : typo_defs) {
    t.row = fresh_row();
    plant(t.column, Cell::text(t.value), t.row);
    typos.push_back({{"column", t.column}, {"row", t.row}, {"value", t.value}, {"expected", t.expected}});
  }

  nlohmann::json anomalies = nlohmann::json::array();
  auto anomaly = [&](const std::string& column, Cell cell) {
    const std::size_t row = fresh_row();
    anomalies.push_back({{"column", column}, {"row", row}, {"value", cell.to_string()}});
    plant(column, std::move(cell), row);
  };
  anomaly("age", Cell::text("thirty-two"));
  anomaly("visit_day", Cell::text("Holiday"));
  anomaly("contact", Cell::integer(12345));
  anomaly("homepage", Cell::text("see profile"));

  nlohmann::json kinds = {
      {"id", "BaseInteger"},        {"age", "BaseInteger"},     {"income", "BaseFloat"},
      {"location", "Coordinate"},   {"visit_day", "Day"},       {"contact", "Email"},
      {"attachment", "Filepath"},   {"signup_month", "Month"},  {"salary_band", "NumericalString"},
      {"review", "Sentence"},       {"homepage", "Url"},        {"postcode", "ZipCode"},
      {"city", "Standard"},         {"satisfaction", "Standard"}, {"product", "Standard"},
      {"customer", "Standard"},
  };
  return {std::move(table),
          {{"version", 1}, {"rows", kRows}, {"kinds", kinds}, {"typos", typos}, {"anomalies", anomalies}}};
}

}  // namespace strclean::datagen
