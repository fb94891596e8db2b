#pragma once

#include "subshift/sadic.hpp"
#include "subshift/word.hpp"

#include <json.hpp>

#include <filesystem>
#include <vector>

namespace subshift {

// {"pi": {"0": "...", "1": "..."}, "mk": [...], "nk": [...], "repeat": r}
// mk/nk entries may be JSON integers or decimal strings (for values beyond 64 bits).
// With "repeat", the listed blocks are concatenated r times.
SadicParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const SadicParams& p);
SadicParams load_params(const std::filesystem::path& path);

// {"factors": ["0000", "0001", ...]}: a language given as an explicit factor list.
bool is_factor_data(const nlohmann::json& j);
std::vector<Word> factors_from_json(const nlohmann::json& j);

nlohmann::json read_json(const std::filesystem::path& path);
// Whitespace-free digit string or comma-separated integers; surrounding whitespace is ignored.
Word read_symbols(const std::filesystem::path& path);

}  // namespace subshift
