#pragma once

#include <string>

#include <json.hpp>

#include "sharpchar/search.hpp"

namespace sharpchar {

// "{a, b, c}" with the values in the given order
std::string braced_values(const std::vector<Cyclotomic>& values);

// Renderings of the library's report types, text for terminals and a
// schema-stable JSON form.  All exact values are serialized as canonical
// expression strings, so equal reports render byte-identically.
std::string sharp_report_text(const CharacterTable& table, const std::string& combo,
                              const SharpReport& report);
nlohmann::ordered_json sharp_report_json(const CharacterTable& table, const std::string& combo,
                                         const SharpReport& report);

std::string validation_text(const CharacterTable& table, const ValidationReport& report);
nlohmann::ordered_json validation_json(const CharacterTable& table,
                                       const ValidationReport& report);

std::string search_hit_text(const SearchHit& hit);
nlohmann::ordered_json search_hit_json(const SearchHit& hit);

std::string family_text(const CounterexampleFamily& family);
nlohmann::ordered_json family_json(const CounterexampleFamily& family);

std::string examples_text(const ExamplesReport& report);
nlohmann::ordered_json examples_json(const ExamplesReport& report);

} // namespace sharpchar
