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

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "rng.hpp"
#include "vocab.hpp"

namespace strclean::datagen {

namespace {

using Gen = std::function<std::string(Rng&)>;

constexpr int kColumnsPerKind = 24;

std::string two(int v) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", v);
  return buf;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
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

// ---- Coordinate -------------------------------------------------------------

struct Dms {
  int deg, min, sec, centi;
  char dir;
};

Dms random_dms(Rng& rng, bool latitude) {
  const int deg = rng.between(0, latitude ? 89 : 179);
  const char dir = latitude ? (rng.chance(0.5) ? 'N' : 'S') : (rng.chance(0.5) ? 'E' : 'W');
  return {deg, rng.between(0, 59), rng.between(0, 59), rng.between(0, 99), dir};
}

std::vector<Gen> coordinate_formats() {
  const std::string deg = "\xC2\xB0";
  return {
      // N29.10.56 W90.00.00
      [](Rng& r) {
        auto a = random_dms(r, true), b = random_dms(r, false);
        return std::string(1, a.dir) + std::to_string(a.deg) + '.' + two(a.min) + '.' + two(a.sec) + ' ' + b.dir +
               std::to_string(b.deg) + '.' + two(b.min) + '.' + two(b.sec);
      },
      // N29:10:56
      [](Rng& r) {
        auto a = random_dms(r, true);
        return std::string(1, a.dir) + std::to_string(a.deg) + ':' + two(a.min) + ':' + two(a.sec);
      },
      // 29°10'56.22"N
      [deg](Rng& r) {
        auto a = random_dms(r, true);
        return std::to_string(a.deg) + deg + two(a.min) + '\'' + two(a.sec) + '.' + two(a.centi) + "\"" + a.dir;
      },
      // 51° 26' 24.5" N, 5° 28' 48.1" E
      [deg](Rng& r) {
        auto a = random_dms(r, true), b = random_dms(r, false);
        return std::to_string(a.deg) + deg + ' ' + std::to_string(a.min) + "' " + std::to_string(a.sec) + '.' +
               std::to_string(a.centi % 10) + "\" " + a.dir + ", " + std::to_string(b.deg) + deg + ' ' +
               std::to_string(b.min) + "' " + std::to_string(b.sec) + '.' + std::to_string(b.centi % 10) + "\" " +
               b.dir;
      },
      // 29:10:56N 090:00:00W
      [](Rng& r) {
        auto a = random_dms(r, true), b = random_dms(r, false);
        char lon[8];
        std::snprintf(lon, sizeof lon, "%03d", b.deg);
        return two(a.deg) + ':' + two(a.min) + ':' + two(a.sec) + a.dir + ' ' + lon + ':' + two(b.min) + ':' +
               two(b.sec) + b.dir;
      },
      // W 4.53.12 (longitude column, space after the direction)
      [](Rng& r) {
        auto b = random_dms(r, false);
        return std::string(1, b.dir) + ' ' + std::to_string(b.deg) + '.' + two(b.min) + '.' + two(b.sec);
      },
  };
}

// ---- Day ----------------------------------------------------------------------

std::vector<Gen> day_formats() {
  using vocab::Words;
  auto from = [](const Words& words, int casing) -> Gen {
    return [&words, casing](Rng& r) {
      std::string s = r.pick(words);
      return casing == 1 ? lower(s) : casing == 2 ? upper(s) : s;
    };
  };
  return {from(vocab::kDaysFull, 0), from(vocab::kDaysShort, 0), from(vocab::kDaysTwo, 0),
          from(vocab::kDaysFull, 2), from(vocab::kDaysShort, 1), from(vocab::kDaysOther, 0)};
}

// ---- Email --------------------------------------------------------------------

std::vector<Gen> email_formats() {
  auto local = [](Rng& r, int style) {
    const std::string f = r.pick(vocab::kFirstNames);
    std::string l = r.pick(vocab::kSurnames);
    std::erase(l, ' ');
    switch (style) {
      case 0: return lower(f) + '.' + lower(l);
      case 1: return f;
      case 2: return lower(f.substr(0, 1)) + '.' + lower(l) + std::to_string(r.between(1, 99));
      case 3: return lower(f) + '_' + lower(l);
      default: return lower(f) + "+" + r.pick(vocab::kPathWords);
    }
  };
  std::vector<Gen> out;
  for (int style = 0; style < 5; ++style)
    out.push_back([style, local](Rng& r) { return local(r, style) + '@' + r.pick(vocab::kMailDomains); });
  return out;
}

// ---- Filepath -----------------------------------------------------------------

std::string path_body(Rng& r, char sep, int depth) {
  std::string out;
  for (int i = 0; i < depth; ++i) out += r.pick(vocab::kPathWords) + sep;
  return out;
}

std::string file_name(Rng& r) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%08d_%03d.", r.between(1, 30000), r.between(0, 20));
  return buf + r.pick(vocab::kExtensions);
}

std::vector<Gen> filepath_formats() {
  return {
      [](Rng& r) { return "C:/Users/" + r.pick(vocab::kFirstNames) + "/Documents/" + path_body(r, '/', r.between(0, 2)) + file_name(r); },
      [](Rng& r) { return "C:\\Windows\\" + path_body(r, '\\', r.between(0, 2)) + file_name(r); },
      [](Rng& r) { return "/home/" + lower(r.pick(vocab::kFirstNames)) + '/' + path_body(r, '/', r.between(1, 3)) + file_name(r); },
      [](Rng& r) { return "../" + path_body(r, '/', r.between(1, 2)) + file_name(r); },
      [](Rng& r) { return "./" + path_body(r, '/', r.between(0, 2)) + file_name(r); },
      [](Rng& r) { return "~/" + path_body(r, '/', r.between(1, 2)) + file_name(r); },
      [](Rng& r) {
        return "DOCUMENTS/HRC_Email_1_" + std::to_string(r.between(100, 999)) + "/HRCH" +
               std::to_string(r.between(1, 9)) + "/DOC_0C0" + std::to_string(r.between(1000000, 9999999)) + ".pdf";
      },
      [](Rng& r) {
        return "../input/lits-png/" + std::string(r.chance(0.5) ? "train" : "test") + "_images/volume-" +
               std::to_string(r.between(0, 130)) + "_slice_" + std::to_string(r.between(0, 900)) + ".png";
      },
      [](Rng& r) { return "D:/My Pictures/" + r.pick(vocab::kCities) + ' ' + std::to_string(r.between(2010, 2023)) + '/' + file_name(r); },
  };
}

// ---- Month --------------------------------------------------------------------

std::vector<Gen> month_formats() {
  auto month = [](Rng& r) { return static_cast<std::size_t>(r.below(12)); };
  auto day = [](Rng& r) { return std::to_string(r.between(1, 28)); };
  auto year = [](Rng& r) { return std::to_string(r.between(1990, 2023)); };
  auto ord = [](int d) {
    const char* s = (d % 10 == 1 && d != 11) ? "st" : (d % 10 == 2 && d != 12) ? "nd" : (d % 10 == 3 && d != 13) ? "rd" : "th";
    return std::to_string(d) + s;
  };
  return {
      [=](Rng& r) { return vocab::kMonthsFull[month(r)]; },
      [=](Rng& r) { return vocab::kMonthsShort[month(r)]; },
      [=](Rng& r) { return vocab::kMonthsShort[month(r)] + ' ' + day(r) + ", " + year(r); },
      [=](Rng& r) { return vocab::kMonthsFull[month(r)] + ' ' + day(r) + ", " + year(r); },
      [=](Rng& r) { return vocab::kMonthsFull[month(r)] + ' ' + year(r); },
      [=](Rng& r) { return vocab::kMonthsFull[month(r)] + " '" + two(r.between(0, 99)); },
      [=](Rng& r) { return day(r) + ' ' + vocab::kMonthsFull[month(r)]; },
      [=](Rng& r) { return ord(r.between(1, 31)) + ' ' + vocab::kMonthsShort[month(r)] + ' ' + year(r); },
      [=](Rng& r) { return day(r) + '-' + vocab::kMonthsShort[month(r)] + '-' + two(r.between(0, 99)); },
      [=](Rng& r) { return upper(vocab::kMonthsShort[month(r)]) + ' ' + year(r); },
  };
}

// ---- Numerical strings -------------------------------------------------------

std::vector<Gen> numerical_formats() {
  return {
      // FIFA position ratings such as 88+2.
      [](Rng& r) { return std::to_string(r.between(30, 92)) + '+' + std::to_string(r.between(1, 3)); },
      // Company size buckets.
      [](Rng& r) {
        static const std::vector<std::string> sizes = {"<10", "10/49", "50-99", "100-500", "500-999", "1000-4999", "5000-9999", "10000+"};
        return r.pick(sizes);
      },
      [](Rng& r) { return r.chance(0.5) ? std::string("Under-7") : std::string("Above-7"); },
      [](Rng& r) { const int lo = r.between(1, 90) * 10; return std::to_string(lo) + " to " + std::to_string(lo + 100); },
      [](Rng& r) { const int lo = r.between(2, 15) * 5000; return with_commas(lo) + '-' + with_commas(lo + 10000); },
      [](Rng& r) { return std::to_string(r.between(0, 100)) + '%'; },
      [](Rng& r) { return '$' + std::to_string(r.between(1, 500)) + '.' + two(r.between(0, 99)); },
      [](Rng& r) {
        static const std::vector<std::string> words = {"Less than", "Greater than", "Over", "Under", "Below", "Above"};
        return r.pick(words) + ' ' + std::to_string(r.between(1, 100));
      },
      [](Rng& r) { return std::to_string(r.between(4, 6)) + '\'' + std::to_string(r.between(0, 11)); },
      [](Rng& r) { const int lo = r.between(18, 64); return std::to_string(lo) + '_' + std::to_string(lo + r.between(4, 10)); },
      [](Rng& r) { return ">" + std::to_string(r.between(1, 50)); },
      [](Rng& r) { return std::to_string(r.between(1, 12)) + ':' + two(r.between(0, 59)); },
  };
}

// ---- Sentence -----------------------------------------------------------------

std::string sentence(Rng& r) {
  return r.pick(vocab::kSubjects) + ' ' + r.pick(vocab::kVerbs) + ' ' + r.pick(vocab::kAdjectives) + ' ' +
         r.pick(vocab::kQualities) + ' ' + r.pick(vocab::kTails);
}

std::vector<Gen> sentence_formats() {
  static const std::vector<std::string> short_reviews = {"Great!", "Not bad", "Terrible service", "Would buy again",
                                                         "Five stars", "Okay I guess"};
  return {
      [](Rng& r) { return sentence(r); },
      [](Rng& r) { return sentence(r) + ' ' + sentence(r); },
      // Review columns carry the odd terse entry.
      [](Rng& r) { return r.chance(0.08) ? r.pick(short_reviews) : sentence(r); },
      [](Rng& r) {
        return "Fiscal year end: " + vocab::kMonthsFull[r.below(12)] + ' ' + std::to_string(r.between(1, 30)) +
               "; reporting period for national accounts data: FY (from " + std::to_string(r.between(1990, 2013)) + ").";
      },
      [](Rng& r) {
        return "Country uses the " + std::to_string(r.between(1968, 2008)) +
               " System of National Accounts methodology and " + r.pick(vocab::kQualities) + " estimates.";
      },
  };
}

// ---- URL ----------------------------------------------------------------------

std::vector<Gen> url_formats() {
  return {
      [](Rng& r) { return "https://" + r.pick(vocab::kWebHosts) + '/'; },
      [](Rng& r) { return "http://" + r.pick(vocab::kWebHosts) + "/login"; },
      [](Rng& r) { return r.pick(vocab::kWebHosts); },
      [](Rng& r) {
        return "https://cdn.sofifa.org/players/4/19/" + std::to_string(r.between(100000, 250000)) + ".png";
      },
      [](Rng& r) {
        return "https://www.walmart.com/ip/" + r.pick(vocab::kColors) + '-' + r.pick(vocab::kFruits) + "-Pack/" +
               std::to_string(r.between(10000000, 99999999));
      },
      [](Rng& r) {
        return "https://" + r.pick(vocab::kWebHosts) + "/search?q=" + lower(r.pick(vocab::kCities)) + "&page=" +
               std::to_string(r.between(1, 9));
      },
      [](Rng& r) { return "HTTP://" + upper(r.pick(vocab::kWebHosts)) + "/INDEX.HTML"; },
  };
}

// ---- Zip code -----------------------------------------------------------------

std::vector<Gen> zip_formats(const std::vector<GeoRow>& geo) {
  std::vector<std::string> gb, nl, ca, bm, any;
  for (const auto& row : geo) {
    if (row.outward) continue;
    (row.country == "GB" ? gb : row.country == "NL" ? nl : row.country == "CA" ? ca : bm).push_back(row.postal_code);
    any.push_back(row.postal_code);
  }
  auto from = [](std::vector<std::string> codes, bool squash) -> Gen {
    return [codes = std::move(codes), squash](Rng& r) {
      std::string c = r.pick(codes);
      if (squash) std::erase(c, ' ');
      return c;
    };
  };
  return {from(gb, false), from(nl, false), from(ca, false), from(bm, false),
          from(nl, true),  from(ca, true),  from(any, false)};
}

// ---- Standard negatives -------------------------------------------------------

std::vector<Gen> negative_formats() {
  using vocab::Words;
  auto from = [](const Words& words) -> Gen { return [&words](Rng& r) { return r.pick(words); }; };
  static const Words likert = {"Strongly disagree", "Disagree", "Neutral", "Agree", "Strongly agree"};
  static const Words yes_no = {"yes", "no"};
  static const Words sizes = {"XS", "S", "M", "L", "XL", "XXL"};
  static const Words blood = {"A+", "A-", "B+", "B-", "AB+", "AB-", "O+", "O-"};
  static const Words status = {"active", "pending", "cancelled", "shipped", "returned", "on hold"};
  static const Words education = {"High school", "Bachelor's degree", "Master's degree", "PhD", "Some college"};
  return {
      from(vocab::kFirstNames),
      from(vocab::kSurnames),
      [](Rng& r) { return r.pick(vocab::kFirstNames) + ' ' + r.pick(vocab::kSurnames); },
      from(vocab::kCities),
      from(vocab::kCountries),
      from(vocab::kColors),
      from(vocab::kProductCategories),
      from(vocab::kFruits),
      from(vocab::kJobs),
      from(vocab::kDepartments),
      from(likert),
      from(yes_no),
      from(sizes),
      from(blood),
      from(vocab::kAnimals),
      from(vocab::kCarMakes),
      from(status),
      from(education),
      from(vocab::kGenres),
      from(vocab::kLanguages),
      [](Rng& r) { return r.pick(vocab::kCompanyStems) + ' ' + r.pick(vocab::kCompanySuffixes); },
      [](Rng& r) { return std::to_string(r.between(1, 250)) + ' ' + r.pick(vocab::kStreetStems) + ' ' + r.pick(vocab::kStreetKinds); },
      [](Rng& r) { return r.pick(vocab::kColors) + ' ' + r.pick(vocab::kMaterials) + ' ' + r.pick(vocab::kProductCategories); },
      from(vocab::kWineVarieties),
  };
}

void add_columns(LabeledCorpus& corpus, Rng& rng, const std::string& label, const std::string& stem,
                 const std::vector<Gen>& formats) {
  for (int i = 0; i < kColumnsPerKind; ++i) {
    LabeledColumn col;
    col.name = stem + '_' + std::to_string(i + 1);
    col.label = label;
    const auto& gen = formats[static_cast<std::size_t>(i) % formats.size()];
    const int n = rng.between(40, 120);
    const double missing = i % 2 == 0 ? 0.0 : 0.04;
    for (int k = 0; k < n; ++k) col.values.push_back(rng.chance(missing) ? std::string() : gen(rng));
    corpus.columns.push_back(std::move(col));
  }
}

}  // namespace

LabeledCorpus inference_corpus() {
  Rng rng(0x70f5);
  LabeledCorpus corpus;
  add_columns(corpus, rng, "Coordinate", "coordinate", coordinate_formats());
  add_columns(corpus, rng, "Day", "day", day_formats());
  add_columns(corpus, rng, "Email", "email", email_formats());
  add_columns(corpus, rng, "Filepath", "filepath", filepath_formats());
  add_columns(corpus, rng, "Month", "month", month_formats());
  add_columns(corpus, rng, "NumericalString", "numerical", numerical_formats());
  add_columns(corpus, rng, "Sentence", "sentence", sentence_formats());
  add_columns(corpus, rng, "Url", "url", url_formats());
  add_columns(corpus, rng, "ZipCode", "zipcode", zip_formats(geo_rows()));
  add_columns(corpus, rng, "Standard", "standard", negative_formats());
  return corpus;
}

}  // namespace strclean::datagen
