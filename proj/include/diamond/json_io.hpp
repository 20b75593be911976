#pragma once

#include <string>

#include <json.hpp>

#include "diamond/duality.hpp"
#include "diamond/quantify.hpp"

namespace diamond {

using nlohmann::json;

json semiring_to_json(const Semiring& s);
Semiring semiring_from_json(const json& j);
/// Accepts a JSON object, a named shorthand ("zq:Q", "bool2"), or a path to
/// a JSON file.
Semiring semiring_from_spec(const std::string& spec);

json monoid_to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const json& j);

json dfa_to_json(const Dfa& d);
Dfa dfa_from_json(const json& j);

json recogniser_to_json(const Recogniser& r);
Recogniser recogniser_from_json(const json& j);

json diamond_to_json(const DiamondRecogniser& d);
DiamondRecogniser diamond_from_json(const json& j);

json load_json_file(const std::string& path);

/// Splits a CLI word into letter indices for the given alphabet. Marked
/// letters ("a'") are matched greedily before their base letter.
Word parse_word(const std::string& text, const std::vector<std::string>& alphabet);

}  // namespace diamond
