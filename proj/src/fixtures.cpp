#include "mslat/fixtures.hpp"

#include <map>

#include "mslat/error.hpp"
#include "mslat/lprime.hpp"
#include "mslat/symmetric.hpp"

namespace mslat {

namespace {

// Simplicial complexes and small CW complexes written as face lists: each
// face names its boundary faces, the empty face is "0".
Json face_poset(const std::vector<std::pair<std::string, std::vector<std::string>>>& faces) {
  Json doc;
  doc["elements"] = Json::array({{{"id", "0"}, {"rank", 0}}});
  doc["covers"] = Json::array();
  std::map<std::string, int> rank{{"0", 0}};
  for (const auto& [id, boundary] : faces) {
    int r = 1;
    if (!boundary.empty()) r = rank.at(boundary.front()) + 1;
    rank[id] = r;
    doc["elements"].push_back({{"id", id}, {"rank", r}});
    if (boundary.empty()) doc["covers"].push_back({"0", id});
    for (const auto& b : boundary) doc["covers"].push_back({b, id});
  }
  return doc;
}

Json square() {
  return face_poset({{"1", {}},
                     {"2", {}},
                     {"3", {}},
                     {"4", {}},
                     {"12", {"1", "2"}},
                     {"23", {"2", "3"}},
                     {"34", {"3", "4"}},
                     {"14", {"1", "4"}},
                     {"1234", {"12", "23", "34", "14"}}});
}

Json c4() {
  return face_poset({{"1", {}},
                     {"2", {}},
                     {"3", {}},
                     {"4", {}},
                     {"12", {"1", "2"}},
                     {"23", {"2", "3"}},
                     {"34", {"3", "4"}},
                     {"14", {"1", "4"}}});
}

Json triangle(bool filled) {
  std::vector<std::pair<std::string, std::vector<std::string>>> faces{
      {"1", {}}, {"2", {}}, {"3", {}}, {"12", {"1", "2"}}, {"13", {"1", "3"}}, {"23", {"2", "3"}}};
  if (filled) faces.push_back({"123", {"12", "13", "23"}});
  return face_poset(faces);
}

Json three_lines() {
  return face_poset({{"l1", {}},
                     {"l2", {}},
                     {"l3", {}},
                     {"p12", {"l1", "l2"}},
                     {"p13", {"l1", "l3"}},
                     {"p23", {"l2", "l3"}}});
}

Json pencil() { return face_poset({{"l1", {}}, {"l2", {}}, {"l3", {}}, {"p", {"l1", "l2", "l3"}}}); }

Json binary_tree() {
  return Json::parse(R"({"root": "r", "edges": [["r","a"],["r","b"],["a","a1"],["a","a2"],["b","b1"],["b","b2"]]})");
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"square", "square-lprime", "c4",   "triangle",          "triangle-complex",
          "3lines", "pencil",        "tree", "multicomplex-1221", "pencil-extended"};
}

Json fixture_json(std::string_view name) {
  if (name == "square") return square();
  if (name == "square-lprime") return to_json(build_lprime(poset_from_json(square()), RankBounded{}).poset);
  if (name == "c4") return c4();
  if (name == "triangle") return triangle(false);
  if (name == "triangle-complex") return triangle(true);
  if (name == "3lines") return three_lines();
  if (name == "pencil") return pencil();
  if (name == "tree") return to_json(tree_lattice(binary_tree()));
  if (name == "multicomplex-1221") {
    MonomialSet m;
    for (const char* s : {"1", "x1", "x2", "x1^2", "x1x2", "x1^3"}) m.insert(parse_monomial(s));
    return pposet_to_json(pposet_from_multicomplex(m));
  }
  if (name == "pencil-extended") {
    auto p = seed_from_geometric(poset_from_json(pencil()));
    p = extend(p, p.element_of(parse_monomial("x1")), 1);
    p = extend(p, p.element_of(parse_monomial("x1^2")), 1);
    return pposet_to_json(p);
  }
  throw Error("unknown fixture '" + std::string(name) + "'");
}

RankedPoset fixture_poset(std::string_view name) { return poset_from_json(fixture_json(name)); }

}  // namespace mslat
