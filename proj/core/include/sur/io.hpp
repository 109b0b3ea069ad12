#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sur/types.hpp"

namespace sur::io {

// Text format: first line n, then one +/- string of length n per line.
// Blank lines and lines starting with '#' are skipped. Trivial bicolorings
// are rejected with kTrivialBicoloring.
BicoloringFamily parse_bicolorings(std::string_view text);
std::string format_bicolorings(const BicoloringFamily& family);

// Text format: first line n, then one comma separated index list per line.
SurFamily parse_family_text(std::string_view text);
std::string format_family_text(const SurFamily& family);

// {"n": 4, "colors": [1, 1, -1, -1]}
nlohmann::json to_json(const Bicoloring& b);
// {"n": 4, "members": [1, 3]}
nlohmann::json to_json(const IndexSet& a);
// {"n": 4, "sets": [{"n": 4, "members": [...]}, ...]}
nlohmann::json to_json(const SurFamily& family);
nlohmann::json to_json(const BicoloringFamily& family);
nlohmann::json to_json(const Certificate& cert);

Bicoloring bicoloring_from_json(const nlohmann::json& j);
IndexSet index_set_from_json(const nlohmann::json& j);
SurFamily family_from_json(const nlohmann::json& j);

// Accepts a family record, a run record whose outputs carry a "family",
// or the text format.
SurFamily parse_family(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace sur::io
