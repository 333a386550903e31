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
#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "rng.hpp"
#include "vocab.hpp"

namespace strclean::datagen {

namespace {

using vocab::Words;

struct Family {
  /// Likert-style response scales and named-entity columns; the rest only
  /// enter the mixed corpus.
  bool core;
  Words names;
  Words values;
  /// Draws a fresh value instead of sampling `values`; used for open-ended entities.
  std::function<std::string(Rng&)> draw = {};
};

constexpr std::size_t kOrdinalColumns = 81;
constexpr std::size_t kNominalColumns = 68;

// Survey scales, plus car-evaluation, nursery, earthquake, soybean and
// audiology style columns for the mixed corpus.
std::vector<Family> ordinal_families() {
  return {
      {true, {"agreement", "opinion", "statement_agree", "AgreeWithPolicy"},
       {"strongly disagree", "disagree", "neutral", "agree", "strongly agree"}},
      {true, {"agreement_7pt", "opinion_scale"},
       {"strongly disagree", "disagree", "somewhat disagree", "neither agree nor disagree", "somewhat agree", "agree",
        "strongly agree"}},
      {true, {"frequency", "LinuxGamesPurchaseFrequency", "DistroChangeFrequency", "how_often"},
       {"never", "rarely", "sometimes", "often", "always"}},
      {true, {"quality", "service_quality", "food_rating"}, {"very poor", "poor", "fair", "good", "excellent"}},
      {true, {"satisfaction", "SatisfactionSteam", "SatisfactionGOG", "overall_satisfaction"},
       {"very dissatisfied", "dissatisfied", "neutral", "satisfied", "very satisfied"}},
      {true, {"importance", "feature_importance"},
       {"not at all important", "slightly important", "moderately important", "very important",
        "extremely important"}},
      {true, {"likelihood", "SteamMachinesWantToBuy", "HardwareUpgradeIntent"},
       {"very unlikely", "unlikely", "neutral", "likely", "very likely"}},
      {true, {"difficulty", "perceived_difficulty"}, {"very difficult", "difficult", "neutral", "easy", "very easy"}},
      {true, {"approval", "job_approval"},
       {"strongly disapprove", "disapprove", "neutral", "approve", "strongly approve"}},
      {true, {"happiness", "mood"}, {"very unhappy", "unhappy", "neutral", "happy", "very happy"}},
      {true, {"usefulness", "helpfulness"}, {"useless", "slightly useful", "useful", "very useful", "extremely useful"}},
      {true, {"recommend", "would_recommend"}, {"definitely not", "probably not", "not sure", "probably", "definitely"}},
      {true, {"confidence", "self_confidence"}, {"not confident", "somewhat confident", "confident", "very confident"}},
      {false, {"buying", "maint", "safety_level"}, {"low", "med", "high", "vhigh"}},
      {false, {"lug_boot", "trunk_size"}, {"small", "med", "big"}},
      {false, {"doors", "door_count"}, {"2", "3", "4", "5more"}},
      {false, {"persons", "capacity"}, {"2", "4", "more"}},
      {false, {"parents", "parental_occupation"}, {"usual", "pretentious", "great_pret"}},
      {false, {"has_nurs", "nursery_quality"}, {"proper", "less_proper", "improper", "critical", "very_crit"}},
      {false, {"housing", "housing_condition"}, {"convenient", "less_conv", "critical"}},
      {false, {"health", "health_recommendation"}, {"not_recom", "priority", "recommended"}},
      {false, {"education_level", "dem_education_level", "education_level_household_head"},
       {"no education", "primary", "secondary", "high school", "bachelor", "master", "doctorate"}},
      {false, {"age_group", "age_band"}, {"child", "teen", "young adult", "adult", "senior"}},
      {true, {"awareness", "AwarenessSteamController"},
       {"i have never heard", "i have heard just a little", "i know something", "i understand it fully"}},
      {true, {"vote", "referendum_vote"},
       {"i would vote against it", "i would probably vote against it", "i would not vote",
        "i would probably vote for it", "i would vote for it"}},
      {false, {"damage_grade", "grade"}, {"Grade 1", "Grade 2", "Grade 3", "Grade 4", "Grade 5"}},
      {false, {"damage_overall_collapse", "damage_overall_leaning"},
       {"none", "insignificant", "moderate", "heavy", "severe"}},
      {false, {"technical_solution_proposed", "repair_level"},
       {"no need", "minor repair", "major repair", "reconstruction"}},
      {false, {"evolution", "activity"}, {"decay", "no growth", "growth"}},
      {false, {"precip", "temp"}, {"lt-norm", "norm", "gt-norm"}},
      {false, {"severity", "stem-cankers"}, {"minor", "pot-severe", "severe"}},
      {false, {"air", "bone", "ar_c"}, {"normal", "mild", "moderate", "severe", "profound"}},
      {false, {"speech", "speech_score"}, {"very_poor", "poor", "normal", "good", "very_good"}},
      {true, {"Rating", "stars"}, {"one star", "two stars", "three stars", "four stars", "five stars"}},
      {false, {"size", "shirt_size"}, {"XS", "S", "M", "L", "XL", "XXL"}},
      {true, {"priority", "ticket_priority"}, {"low", "medium", "high", "critical"}},
      {false, {"spice_level", "heat"}, {"mild", "medium", "hot", "extra hot"}},
      {false, {"tier", "membership"}, {"basic", "silver", "gold", "platinum"}},
      {false, {"experience", "seniority"}, {"entry level", "junior", "mid level", "senior", "lead"}},
      {false, {"income_group", "income"},
       {"low income", "lower middle income", "upper middle income", "high income"}},
      {false, {"LinuxUserHowLong", "DesktopLinuxGamerHowLong"},
       {"less than a year", "1 to 2 years", "3 to 5 years", "more than 5 years"}},
      {true, {"HeavyGamer", "LinuxGamingHabitFuture"}, {"not at all", "occasionally", "regularly", "heavily"}},
      {false, {"condition", "item_condition"}, {"acceptable", "good", "very good", "like new", "new"}},
      {false, {"travel_class", "cabin"}, {"economy", "premium economy", "business", "first"}},
      {false, {"pain", "pain_level"}, {"none", "mild", "moderate", "severe", "worst possible"}},
      {false, {"fluency", "english_proficiency"},
       {"beginner", "elementary", "intermediate", "upper intermediate", "advanced", "native"}},
      {true, {"risk", "risk_level"}, {"very low", "low", "moderate", "high", "very high"}},
  };
}

std::string listing_name(Rng& r) {
  static const Words adjectives = {"Cozy", "Sunny", "Spacious", "Charming", "Modern", "Quiet", "Bright", "Lovely"};
  static const Words places = {"studio", "loft", "apartment", "room", "flat", "townhouse", "suite"};
  return r.pick(adjectives) + ' ' + r.pick(places) + " near " + r.pick(vocab::kCities);
}

std::vector<Family> nominal_families() {
  auto full_name = [](Rng& r) { return r.pick(vocab::kFirstNames) + ' ' + r.pick(vocab::kSurnames); };
  auto company = [](Rng& r) { return r.pick(vocab::kCompanyStems) + ' ' + r.pick(vocab::kCompanySuffixes); };
  auto street = [](Rng& r) { return r.pick(vocab::kStreetStems) + ' ' + r.pick(vocab::kStreetKinds); };
  auto variety = [](Rng& r) {
    static const Words flavours = {"Chicken", "Beef", "Shrimp", "Spicy", "Miso", "Curry", "Kimchi", "Tonkotsu", "Soy Sauce", "Vegetable"};
    static const Words kinds = {"Noodle", "Ramen", "Udon", "Soba", "Cup Noodle"};
    return r.pick(flavours) + ' ' + r.pick(kinds);
  };
  return {
      {true, {"city", "PlaceOfBirth", "province"}, vocab::kCities},
      {true, {"country", "Nationality"}, vocab::kCountries},
      {true, {"host_name", "customer_name"}, {}, full_name},
      {true, {"name", "listing"}, {}, listing_name},
      {true, {"color", "cap-color"}, vocab::kColors},
      {true, {"variety", "fruit"}, vocab::kFruits},
      {true, {"make", "brand"}, vocab::kCarMakes},
      {true, {"species", "pet"}, vocab::kAnimals},
      {true, {"Department", "dept"}, vocab::kDepartments},
      {true, {"genre", "main_category"}, vocab::kGenres},
      {true, {"JobRole", "occupation"}, vocab::kJobs},
      {true, {"language", "mother_tongue"}, vocab::kLanguages},
      {true, {"sport", "discipline"}, vocab::kSports},
      {true, {"category", "product_category"}, vocab::kProductCategories},
      {true, {"payment_method", "payment"}, vocab::kPayment},
      {true, {"style", "beer_style"}, vocab::kBeerStyles},
      {true, {"cuisine", "restaurant_type"}, vocab::kCuisines},
      {true, {"instrument", "instrument_played"}, vocab::kInstruments},
      {true, {"material", "fabric"}, vocab::kMaterials},
      {true, {"airline", "carrier"}, vocab::kAirlines},
      {true, {"company", "Club"}, {}, company},
      {true, {"street", "address"}, {}, street},
      {false, {"cap-shape", "shape"}, vocab::kMushroomCapShape},
      {false, {"odor", "smell"}, vocab::kMushroomOdor},
      {false, {"habitat", "environment"}, vocab::kMushroomHabitat},
      {false, {"class", "edibility"}, {"edible", "poisonous"}},
      {false, {"gill-size", "gill-spacing"}, {"broad", "narrow", "close", "crowded"}},
      {true, {"Type 1", "Type 2"}, vocab::kPokemonTypes},
      {false, {"work_type", "employment"}, vocab::kWorkType},
      {false, {"room_type", "accommodation"}, vocab::kRoomType},
      {true, {"Style", "packaging"}, vocab::kRamenStyle},
      {true, {"Variety", "product_name"}, {}, variety},
      {false, {"EYE", "eye_color"}, vocab::kEyeColors},
      {false, {"HAIR", "hair_color"}, vocab::kHairColors},
      {false, {"ALIGN", "alignment"}, vocab::kAlignment},
      {false, {"race/ethnicity", "group"}, vocab::kEthnicity},
      {true, {"Topic", "subject"}, vocab::kTopics},
      {true, {"major_discipline", "field_of_study"}, vocab::kMajors},
      {false, {"company_type", "organisation"}, vocab::kCompanyTypes},
      {true, {"currency", "currency_code"}, vocab::kCurrencies},
      {false, {"smoking_status", "smoker"}, vocab::kSmoking},
      {true, {"type", "gov_policy"}, vocab::kPolicyTypes},
      {true, {"region_1", "wine_variety"}, vocab::kWineVarieties},
      {false, {"GradeID", "cohort"}, {"G-02", "G-04", "G-05", "G-06", "G-07", "G-08", "G-09", "G-10", "G-11", "G-12"}},
      {false, {"SectionID", "section"}, {"A", "B", "C"}},
      {false, {"gender", "sex"}, {"Male", "Female"}},
  };
}

// Questionnaire exports often strip column names down to item codes.
std::string anonymous_name(Rng& rng) {
  static const Words stems = {"q", "item_", "var", "col", "field_", "attr_", "x"};
  return rng.pick(stems) + std::to_string(rng.between(1, 60));
}

LabeledColumn make_column(Rng& rng, const Family& family, const std::string& label) {
  LabeledColumn col;
  col.label = label;
  col.name = rng.chance(0.2) ? anonymous_name(rng) : rng.pick(family.names);
  const int n = rng.between(40, 600);
  const double missing = rng.chance(0.3) ? rng.uniform(0.0, 0.08) : 0.0;
  std::vector<std::string> pool = family.values;
  // Nominal columns often use only part of a large vocabulary.
  if (!family.draw && pool.size() > 6 && rng.chance(0.5)) {
    rng.shuffle(pool);
    pool.resize(rng.between(static_cast<int>(pool.size() / 2), static_cast<int>(pool.size())));
  }
  std::vector<double> weights;
  for (std::size_t i = 0; i < pool.size(); ++i) weights.push_back(rng.uniform(0.2, 1.0));
  for (int k = 0; k < n; ++k) {
    if (rng.chance(missing)) {
      col.values.emplace_back();
    } else if (family.draw) {
      col.values.push_back(family.draw(rng));
    } else {
      col.values.push_back(pool[rng.weighted(weights)]);
    }
  }
  return col;
}

void add_columns(LabeledCorpus& corpus, Rng& rng, std::vector<Family> families, bool mixed, std::size_t count,
                 const std::string& label) {
  if (!mixed) std::erase_if(families, [](const Family& f) { return !f.core; });
  std::vector<std::size_t> order(families.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t made = 0; made < count;) {
    rng.shuffle(order);
    for (std::size_t i = 0; i < order.size() && made < count; ++i, ++made)
      corpus.columns.push_back(make_column(rng, families[order[i]], label));
  }
}

}  // namespace

LabeledCorpus stattype_corpus(bool mixed) {
  Rng rng(mixed ? 0x57a8 : 0x57a7);
  LabeledCorpus corpus;
  add_columns(corpus, rng, ordinal_families(), mixed, kOrdinalColumns, "ordinal");
  add_columns(corpus, rng, nominal_families(), mixed, kNominalColumns, "nominal");
  return corpus;
}

}  // namespace strclean::datagen
