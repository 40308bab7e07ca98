#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mslat/poset.hpp"

namespace mslat {

using Json = nlohmann::ordered_json;

/// Parses the interchange format
///   {"elements": [{"id": "a", "rank": 1}, ...], "covers": [["lower", "upper"], ...]}
/// and validates it. Malformed JSON or a wrong shape throws PosetError(Parse).
RankedPoset load_poset(std::string_view text);
RankedPoset poset_from_json(const Json& doc);
RankedPoset load_poset_file(const std::filesystem::path& path);

Json to_json(const RankedPoset& p);

/// Reads a whole file; throws mslat::Error if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace mslat
