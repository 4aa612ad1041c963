#pragma once

// JSON forms shared by the CLI, the tests and the on-disk memo cache.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "iwahori/characters.hpp"
#include "iwahori/hecke.hpp"

namespace iwahori {

inline constexpr const char* kSchema = "iwahori-kit/1";

nlohmann::json to_json(const Coweight& lambda);
Coweight coweight_from_json(const nlohmann::json& j);

// [[exponent, coefficient], ...] in increasing exponent order.
nlohmann::json to_json(const Laurent& c);
Laurent laurent_from_json(const nlohmann::json& j);

// {"translation", "finite", "word", "omega", "length"}
nlohmann::json element_json(const AffineWeylGroup& g, const AffineWeylElement& x);

// Canonical form: [{"word", "omega", "coeffs"}, ...] sorted by (word, omega).
nlohmann::json hecke_json(const AffineWeylGroup& g, const HeckeElement& h);
HeckeElement hecke_from_json(const AffineWeylGroup& g, const nlohmann::json& j);

nlohmann::json group_algebra_json(const AffineWeylGroup& g, const GroupAlgebraElement& a);
nlohmann::json character_json(const Character& chi);

// Reduced-word memo of g as
// {"schema", "kind": "reduced-word-memo", "group", "d",
//  "entries": [{"translation", "finite", "word", "omega"}, ...]}.
nlohmann::json memo_json(const AffineWeylGroup& g);
// Imports every entry that checks out against g; malformed documents or
// entries are ignored. Returns the number of entries accepted.
std::size_t import_memo_json(const AffineWeylGroup& g, const nlohmann::json& j);

std::filesystem::path memo_path(const std::filesystem::path& dir, const RootDatum& rd);
std::size_t load_memo(const std::filesystem::path& dir, const AffineWeylGroup& g);
void save_memo(const std::filesystem::path& dir, const AffineWeylGroup& g);

}  // namespace iwahori
