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

#include <string>
#include <vector>

namespace strclean::datagen::vocab {

using Words = std::vector<std::string>;

inline const Words kFirstNames = {
    "James", "Mary", "John", "Patricia", "Robert", "Jennifer", "Michael", "Linda", "William", "Elizabeth",
    "David", "Barbara", "Richard", "Susan", "Joseph", "Jessica", "Thomas", "Sarah", "Charles", "Karen",
    "Daniel", "Nancy", "Matthew", "Lisa", "Anthony", "Betty", "Mark", "Margaret", "Donald", "Sandra",
    "Steven", "Ashley", "Paul", "Kimberly", "Andrew", "Emily", "Joshua", "Donna", "Kenneth", "Michelle",
    "Kevin", "Carol", "Brian", "Amanda", "George", "Melissa", "Timothy", "Deborah", "Ronald", "Stephanie",
    "Jan", "Anna", "Pieter", "Sanne", "Daan", "Emma", "Lars", "Sophie", "Ahmed", "Fatima",
    "Wei", "Mei", "Raj", "Priya", "Olga", "Ivan", "Lucas", "Julia", "Mateo", "Camila",
    "Noah", "Olivia", "Liam", "Ava", "Ethan", "Mia", "Hugo", "Chloe", "Omar", "Leila"};

inline const Words kSurnames = {
    "Smith", "Johnson", "Williams", "Brown", "Jones", "Garcia", "Miller", "Davis", "Rodriguez", "Martinez",
    "Hernandez", "Lopez", "Gonzalez", "Wilson", "Anderson", "Thomas", "Taylor", "Moore", "Jackson", "Martin",
    "Lee", "Perez", "Thompson", "White", "Harris", "Sanchez", "Clark", "Ramirez", "Lewis", "Robinson",
    "de Vries", "Jansen", "Bakker", "Visser", "Smit", "Meijer", "de Boer", "Mulder", "Bos", "Vos",
    "Chen", "Wang", "Li", "Zhang", "Kumar", "Patel", "Singh", "Ivanov", "Petrov", "Novak",
    "Rossi", "Russo", "Ferrari", "Muller", "Schmidt", "Schneider", "Fischer", "Weber", "Dubois", "Laurent"};

inline const Words kCities = {
    "Amsterdam", "Rotterdam", "Utrecht", "Eindhoven", "Groningen", "Tilburg", "Almere", "Breda", "Nijmegen",
    "London", "Manchester", "Birmingham", "Leeds", "Glasgow", "Liverpool", "Bristol", "Edinburgh", "Cardiff",
    "Toronto", "Montreal", "Vancouver", "Calgary", "Ottawa", "Edmonton", "Winnipeg", "Halifax",
    "Berlin", "Hamburg", "Munich", "Cologne", "Paris", "Lyon", "Marseille", "Toulouse", "Madrid", "Barcelona",
    "Valencia", "Seville", "Rome", "Milan", "Naples", "Turin", "Vienna", "Zurich", "Geneva", "Brussels",
    "Antwerp", "Copenhagen", "Stockholm", "Oslo", "Helsinki", "Dublin", "Lisbon", "Porto", "Prague", "Warsaw",
    "Krakow", "Budapest", "Athens", "Istanbul", "Tokyo", "Osaka", "Seoul", "Busan", "Beijing", "Shanghai",
    "Mumbai", "Delhi", "Bangalore", "Sydney", "Melbourne", "Auckland", "Chicago", "Boston", "Seattle", "Denver"};

inline const Words kCountries = {
    "Netherlands", "Belgium", "Germany", "France", "Spain", "Portugal", "Italy", "Austria", "Switzerland",
    "Denmark", "Sweden", "Norway", "Finland", "Ireland", "United Kingdom", "Poland", "Czech Republic",
    "Hungary", "Greece", "Turkey", "Japan", "South Korea", "China", "India", "Australia", "New Zealand",
    "Canada", "United States", "Mexico", "Brazil", "Argentina", "Chile", "Peru", "Colombia", "South Africa",
    "Egypt", "Nigeria", "Kenya", "Morocco", "Israel"};

inline const Words kColors = {"red",    "blue",  "green", "yellow", "black",  "white",     "grey",   "orange",
                              "purple", "pink",  "brown", "beige",  "navy",   "turquoise", "maroon", "olive",
                              "silver", "gold",  "cyan",  "ivory",  "violet", "teal"};

inline const Words kFruits = {"apple",  "banana",     "cherry",  "grape",  "kiwi",   "lemon",     "mango",
                              "orange", "peach",      "pear",    "plum",   "melon",  "pineapple", "apricot",
                              "fig",    "strawberry", "papaya",  "lychee", "guava",  "raspberry"};

inline const Words kCarMakes = {"toyota", "honda",   "volkswagen", "bmw",        "mercedes-benz", "audi",
                                "ford",   "chevrolet", "nissan",   "mazda",      "subaru",        "volvo",
                                "peugeot", "renault", "fiat",      "alfa-romero", "jaguar",       "porsche",
                                "saab",   "mitsubishi", "isuzu",   "dodge",      "plymouth"};

inline const Words kAnimals = {"dog",   "cat",    "horse", "rabbit",  "hamster", "parrot",  "goldfish",
                               "turtle", "ferret", "guinea pig", "lizard", "snake", "canary", "chinchilla"};

inline const Words kDepartments = {"Sales", "Research & Development", "Human Resources", "Marketing", "Finance",
                                   "Legal", "Operations", "Engineering", "Customer Support", "Procurement",
                                   "Logistics", "IT"};

inline const Words kGenres = {"Drama", "Comedy", "Action", "Thriller", "Horror", "Romance", "Documentary",
                              "Animation", "Science Fiction", "Fantasy", "Crime", "Western", "Musical",
                              "Mystery", "Adventure"};

inline const Words kJobs = {"Sales Executive", "Research Scientist", "Laboratory Technician",
                            "Manufacturing Director", "Healthcare Representative", "Manager",
                            "Sales Representative", "Research Director", "Human Resources", "Nurse", "Teacher",
                            "Accountant", "Software Developer", "Data Analyst", "Electrician", "Plumber",
                            "Pharmacist", "Architect", "Chef", "Pilot"};

inline const Words kLanguages = {"English", "Dutch", "German", "French", "Spanish", "Italian", "Portuguese",
                                 "Polish", "Turkish", "Arabic", "Hindi", "Mandarin", "Japanese", "Korean",
                                 "Russian", "Swedish", "Greek"};

inline const Words kSports = {"football", "basketball", "tennis", "swimming", "cycling", "running", "hockey",
                              "volleyball", "golf", "rowing", "boxing", "judo", "cricket", "baseball", "rugby",
                              "badminton", "skiing", "surfing"};

inline const Words kProductCategories = {
    "Electronics", "Books", "Clothing", "Toys", "Garden", "Kitchen", "Sports", "Beauty", "Automotive",
    "Office Supplies", "Pet Supplies", "Music", "Movies", "Furniture", "Jewelry", "Shoes", "Baby",
    "Health", "Grocery", "Tools", "Video Games", "Software", "Appliances", "Luggage", "Crafts",
    "Camera", "Phones", "Watches", "Bedding", "Lighting", "Stationery", "Outdoor", "Fitness",
    "Cleaning", "Party Supplies", "Board Games", "Art", "Photography", "Hardware", "Seasonal"};

inline const Words kPayment = {"credit card", "debit card", "paypal", "bank transfer", "cash", "gift card",
                               "apple pay", "ideal"};

inline const Words kBeerStyles = {"American IPA", "American Pale Ale", "American Amber", "Saison", "Witbier",
                                  "Hefeweizen", "Kolsch", "Oatmeal Stout", "Russian Imperial Stout",
                                  "Belgian Dubbel", "Belgian Tripel", "Pilsner", "Porter", "Gose", "Berliner Weisse",
                                  "Brown Ale", "Scotch Ale", "Fruit Beer", "Cream Ale", "Rye Beer"};

inline const Words kCuisines = {"Italian", "Mexican", "Thai", "Indian", "Japanese", "Chinese", "French",
                                "Greek", "Lebanese", "Vietnamese", "Ethiopian", "Spanish", "Korean", "Turkish"};

inline const Words kInstruments = {"piano", "guitar", "violin", "cello", "flute", "clarinet", "trumpet",
                                   "saxophone", "drums", "harp", "bass", "oboe", "trombone", "ukulele"};

inline const Words kMaterials = {"cotton", "wool", "silk", "linen", "polyester", "nylon", "leather", "denim",
                                 "cashmere", "velvet", "bamboo", "hemp"};

inline const Words kAirlines = {"KLM", "Lufthansa", "Air France", "British Airways", "Iberia", "Ryanair",
                                "easyJet", "Transavia", "Delta", "United", "Emirates", "Qatar Airways",
                                "Turkish Airlines", "SAS", "Finnair", "TAP"};

inline const Words kStreetStems = {"Oak", "Maple", "Church", "Station", "Mill", "Park", "High", "Market",
                                   "Queen", "King", "Bridge", "Garden", "Water", "Castle", "Spring", "Forest"};

inline const Words kStreetKinds = {"Street", "Road", "Lane", "Avenue", "Way", "Close", "Drive", "Square"};

inline const Words kCompanyStems = {"Acme", "Globex", "Initech", "Umbrella", "Stark", "Wayne", "Hooli",
                                    "Vandelay", "Soylent", "Tyrell", "Cyberdyne", "Wonka", "Dunder", "Pied",
                                    "Massive", "Aperture", "Oscorp", "Gringotts", "Monarch", "Nakatomi"};

inline const Words kCompanySuffixes = {"Inc", "Ltd", "BV", "GmbH", "Group", "Holdings", "Labs", "Systems",
                                       "Partners", "Industries"};

inline const Words kMushroomCapShape = {"bell", "conical", "convex", "flat", "knobbed", "sunken"};
inline const Words kMushroomOdor = {"almond", "anise", "creosote", "fishy", "foul", "musty", "none", "pungent",
                                    "spicy"};
inline const Words kMushroomHabitat = {"grasses", "leaves", "meadows", "paths", "urban", "waste", "woods"};
inline const Words kPokemonTypes = {"Grass", "Fire", "Water", "Bug", "Normal", "Poison", "Electric", "Ground",
                                   "Fairy", "Fighting", "Psychic", "Rock", "Ghost", "Ice", "Dragon", "Dark",
                                   "Steel", "Flying"};
inline const Words kWorkType = {"Private", "Self-employed", "Govt_job", "children", "Never_worked"};
inline const Words kRoomType = {"Private room", "Entire home/apt", "Shared room"};
inline const Words kRamenStyle = {"Pack", "Bowl", "Cup", "Tray", "Box", "Bar", "Can"};
inline const Words kEyeColors = {"Blue Eyes", "Brown Eyes", "Green Eyes", "Black Eyes", "Red Eyes",
                                 "White Eyes", "Hazel Eyes", "Grey Eyes", "Violet Eyes"};
inline const Words kHairColors = {"Black Hair", "Brown Hair", "Blond Hair", "Red Hair", "White Hair",
                                  "Grey Hair", "Bald", "Strawberry Blond Hair", "Auburn Hair", "Green Hair"};
inline const Words kAlignment = {"Good Characters", "Bad Characters", "Neutral Characters",
                                 "Reformed Criminals"};
inline const Words kEthnicity = {"group A", "group B", "group C", "group D", "group E"};
inline const Words kTopics = {"IT", "Math", "Arabic", "Science", "English", "Quran", "Spanish", "French",
                              "History", "Biology", "Chemistry", "Geology"};
inline const Words kMajors = {"STEM", "Humanities", "Business Degree", "Arts", "No Major", "Other"};
inline const Words kCompanyTypes = {"Pvt Ltd", "Funded Startup", "Public Sector", "Early Stage Startup", "NGO",
                                    "Other"};
inline const Words kCurrencies = {"USD", "GBP", "EUR", "CAD", "AUD", "SEK", "NZD", "DKK", "NOK", "CHF", "MXN"};
inline const Words kSmoking = {"formerly smoked", "never smoked", "smokes", "Unknown"};
inline const Words kPolicyTypes = {"Immigration", "Education", "Health", "Social", "Technology",
                                   "Alert", "Transformation", "Administrative"};
inline const Words kWineVarieties = {"Pinot Noir", "Chardonnay", "Cabernet Sauvignon", "Red Blend",
                                     "Bordeaux-style Red Blend", "Riesling", "Sauvignon Blanc", "Syrah",
                                     "Rose", "Merlot", "Nebbiolo", "Zinfandel", "Sangiovese", "Malbec",
                                     "Tempranillo", "Portuguese Red", "Shiraz", "Gruner Veltliner"};

// Sentence building blocks.
inline const Words kSubjects = {"The product", "This wine", "The service", "Our guide", "The hotel room",
                                "The delivery", "This phone", "The staff", "The recipe", "The new update",
                                "The museum", "This book", "The battery", "The restaurant", "The course"};
inline const Words kVerbs = {"arrived", "was", "felt", "looked", "seemed", "tasted", "worked", "performed",
                             "became", "stayed"};
inline const Words kAdjectives = {"quickly", "remarkably", "really", "surprisingly", "fairly", "quite",
                                  "extremely", "somewhat"};
inline const Words kQualities = {"good", "fresh", "reliable", "bright", "slow", "noisy", "clean", "helpful",
                                 "crisp", "disappointing", "elegant", "solid", "expensive", "generous"};
inline const Words kTails = {"and I would recommend it to friends.",
                             "but the packaging could be better.",
                             "with notes of cherry, plum and vanilla.",
                             "although the price is a little high.",
                             "and the support team answered within a day.",
                             "so we will certainly come back next year.",
                             "even after three months of daily use.",
                             "compared to the previous version we owned.",
                             "and everything matched the description on the website.",
                             "though the instructions were hard to follow."};

// Month and day vocabulary.
inline const Words kMonthsFull = {"January", "February", "March",     "April",   "May",      "June",
                                  "July",    "August",   "September", "October", "November", "December"};
inline const Words kMonthsShort = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                   "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
inline const Words kDaysFull = {"Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"};
inline const Words kDaysShort = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};
inline const Words kDaysTwo = {"Mo", "Tu", "We", "Th", "Fr", "Sa", "Su"};
inline const Words kDaysOther = {"Mon.", "Tues", "Wed.", "Thurs", "Fri.", "Sat.", "Sun."};

// E-mail, URL and path vocabulary.
inline const Words kMailDomains = {"gmail.com", "hotmail.com", "hotmail.co.uk", "outlook.com", "yahoo.com",
                                   "tue.nl", "student.tue.nl", "uva.nl", "ziggo.nl", "web.de", "orange.fr",
                                   "company.org", "example.com", "mail.ru", "icloud.com", "protonmail.ch"};
inline const Words kWebHosts = {"www.tue.nl", "canvas.tue.nl", "www.google.com", "google.com", "github.com",
                                "en.wikipedia.org", "www.bbc.co.uk", "cdn.sofifa.org", "www.walmart.com",
                                "docs.python.org", "www.kaggle.com", "news.ycombinator.com", "www.nu.nl",
                                "shop.example.com", "api.weather.gov", "maps.google.nl"};
inline const Words kPathWords = {"data", "images", "docs", "reports", "archive", "scans", "train", "test",
                                 "masks", "volumes", "exports", "backup", "projects", "src", "assets", "logs",
                                 "2019", "2020", "final", "raw"};
inline const Words kExtensions = {"png", "jpg", "csv", "pdf", "txt", "nii", "json", "docx", "xlsx", "log"};

}  // namespace strclean::datagen::vocab
