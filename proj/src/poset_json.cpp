#include "mslat/poset_json.hpp"

#include <fstream>
#include <sstream>

#include "mslat/error.hpp"

namespace mslat {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw PosetError(PosetError::Kind::Parse, "poset document: " + what);
}

}  // namespace

RankedPoset poset_from_json(const Json& doc) {
  if (!doc.is_object()) parse_fail("top level must be an object");
  if (!doc.contains("elements") || !doc["elements"].is_array()) parse_fail("missing \"elements\" array");
  std::vector<ElementDecl> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_object() || !e.contains("id") || !e["id"].is_string() || !e.contains("rank") ||
        !e["rank"].is_number_integer()) {
      parse_fail("each element needs a string \"id\" and an integer \"rank\"");
    }
    elements.push_back({e["id"].get<std::string>(), e["rank"].get<long long>()});
  }
  std::vector<CoverDecl> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) parse_fail("\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        parse_fail("each cover must be a pair [lowerId, upperId]");
      }
      covers.push_back({c[0].get<std::string>(), c[1].get<std::string>()});
    }
  }
  return RankedPoset::build(std::move(elements), std::move(covers));
}

RankedPoset load_poset(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(e.what());
  }
  return poset_from_json(doc);
}

RankedPoset load_poset_file(const std::filesystem::path& path) { return load_poset(read_text_file(path)); }

Json to_json(const RankedPoset& p) {
  Json doc;
  doc["elements"] = Json::array();
  for (Elem e = 0; e < p.size(); ++e) {
    doc["elements"].push_back({{"id", p.id(e)}, {"rank", p.rank(e)}});
  }
  doc["covers"] = Json::array();
  for (const auto& c : p.cover_decls()) doc["covers"].push_back(Json::array({c.lower, c.upper}));
  return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mslat
