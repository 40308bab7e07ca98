#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mslat/error.hpp"
#include "mslat/poset.hpp"
#include "mslat/poset_json.hpp"

using namespace mslat;

namespace {

RankedPoset square() {
  return load_poset(R"({
    "elements": [{"id":"0","rank":0},{"id":"1","rank":1},{"id":"2","rank":1},{"id":"3","rank":1},
                 {"id":"4","rank":1},{"id":"12","rank":2},{"id":"23","rank":2},{"id":"34","rank":2},
                 {"id":"14","rank":2},{"id":"1234","rank":3}],
    "covers": [["0","1"],["0","2"],["0","3"],["0","4"],["1","12"],["2","12"],["2","23"],["3","23"],
               ["3","34"],["4","34"],["1","14"],["4","14"],["12","1234"],["23","1234"],["34","1234"],
               ["14","1234"]]})");
}

RankedPoset three_lines() {
  return load_poset(R"({
    "elements": [{"id":"0","rank":0},{"id":"l1","rank":1},{"id":"l2","rank":1},{"id":"l3","rank":1},
                 {"id":"p12","rank":2},{"id":"p13","rank":2},{"id":"p23","rank":2}],
    "covers": [["0","l1"],["0","l2"],["0","l3"],["l1","p12"],["l2","p12"],["l1","p13"],["l3","p13"],
               ["l2","p23"],["l3","p23"]]})");
}

std::set<std::string> ids(const RankedPoset& p, const std::vector<Elem>& es) {
  std::set<std::string> out;
  for (auto e : es) out.insert(p.id(e));
  return out;
}

// Brute force: walk covers instead of using the stored bitsets.
bool reach(const RankedPoset& p, Elem x, Elem y) {
  if (x == y) return true;
  for (Elem u : p.upper_covers(x)) {
    if (reach(p, u, y)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("natural identifier order") {
  CHECK(natural_less("x2", "x10"));
  CHECK_FALSE(natural_less("x10", "x2"));
  CHECK(natural_less("1", "12"));
  CHECK(natural_less("4", "12"));
  CHECK(natural_less("a", "b"));
  CHECK_FALSE(natural_less("a", "a"));
}

TEST_CASE("square loads with ten elements") {
  auto p = square();
  CHECK(p.size() == 10);
  CHECK(f_vector(p) == FVector{1, 4, 4, 1});
  CHECK(p.id(p.bottom()) == "0");
}

TEST_CASE("minimum-only poset") {
  auto p = load_poset(R"({"elements":[{"id":"z","rank":0}],"covers":[]})");
  CHECK(f_vector(p) == FVector{1});
  CHECK(shadow(p, 0).empty());
}

TEST_CASE("validation errors carry witnesses") {
  auto kind_of = [](const char* doc) {
    try {
      load_poset(doc);
    } catch (const PosetError& e) {
      return e.kind();
    }
    FAIL("no error");
    return PosetError::Kind::Parse;
  };
  using K = PosetError::Kind;
  CHECK(kind_of("{") == K::Parse);
  CHECK(kind_of(R"({"elements":[{"id":"a","rank":1}],"covers":[]})") == K::MissingBottom);
  CHECK(kind_of(R"({"elements":[{"id":"a","rank":0},{"id":"b","rank":0}],"covers":[]})") == K::DuplicateBottom);
  CHECK(kind_of(R"({"elements":[{"id":"a","rank":0},{"id":"a","rank":1}],"covers":[]})") == K::DuplicateId);
  CHECK(kind_of(R"({"elements":[{"id":"a","rank":0},{"id":"b","rank":2}],"covers":[["a","b"]]})") == K::RankStep);
  CHECK(kind_of(R"({"elements":[{"id":"a","rank":0},{"id":"b","rank":1}],"covers":[["a","c"]]})") == K::UnknownId);
  CHECK(kind_of(R"({"elements":[{"id":"a","rank":0},{"id":"b","rank":1}],"covers":[]})") == K::NoLowerCover);
  CHECK(kind_of(R"({"elements":[{"id":"a","rank":0},{"id":"b","rank":-1}],"covers":[]})") == K::NegativeRank);

  // Two atoms both covered by c and d: c and d have two maximal lower bounds.
  try {
    load_poset(R"({"elements":[{"id":"0","rank":0},{"id":"u","rank":1},{"id":"v","rank":1},
                               {"id":"c","rank":2},{"id":"d","rank":2}],
                   "covers":[["0","u"],["0","v"],["u","c"],["v","c"],["u","d"],["v","d"]]})");
    FAIL("expected meet failure");
  } catch (const PosetError& e) {
    CHECK(e.kind() == K::MeetFailure);
    REQUIRE(e.witnesses().size() >= 2);
    CHECK(e.witnesses()[0] == "c");
    CHECK(e.witnesses()[1] == "d");
  }
}

TEST_CASE("order matches cover reachability") {
  for (const auto& p : {square(), three_lines()}) {
    for (Elem x = 0; x < p.size(); ++x) {
      for (Elem y = 0; y < p.size(); ++y) CHECK(p.leq(x, y) == reach(p, x, y));
    }
  }
}

TEST_CASE("meets on three lines") {
  auto p = three_lines();
  CHECK(p.id(p.meet(p.at("p12"), p.at("p13"))) == "l1");
  CHECK(p.meet(p.at("p12"), p.bottom()) == p.bottom());
  CHECK(p.meet(p.at("l2"), p.at("l2")) == p.at("l2"));
}

TEST_CASE("meet is the greatest common lower bound, commutative and associative") {
  for (const auto& p : {square(), three_lines()}) {
    for (Elem x = 0; x < p.size(); ++x) {
      for (Elem y = 0; y < p.size(); ++y) {
        Elem m = p.meet(x, y);
        CHECK(m == p.meet(y, x));
        CHECK(p.leq(m, x));
        CHECK(p.leq(m, y));
        for (Elem z = 0; z < p.size(); ++z) {
          if (p.leq(z, x) && p.leq(z, y)) CHECK(p.leq(z, m));
          CHECK(p.meet(p.meet(x, y), z) == p.meet(x, p.meet(y, z)));
        }
      }
    }
  }
}

TEST_CASE("joins with an adjoined top") {
  auto p = three_lines();
  std::vector<Elem> s{p.at("l1"), p.at("l2")};
  CHECK(p.id(*p.join(s)) == "p12");
  std::vector<Elem> all{p.at("l1"), p.at("l2"), p.at("l3")};
  CHECK_FALSE(p.join(all).has_value());
  std::vector<Elem> one{p.at("p13")};
  CHECK(*p.join(one) == p.at("p13"));

  auto q = square();
  for (Elem x = 0; x < q.size(); ++x) {
    for (Elem y = 0; y < q.size(); ++y) {
      std::vector<Elem> pair{x, y};
      auto j = q.join(pair);
      std::vector<Elem> ub;
      for (Elem z = 0; z < q.size(); ++z) {
        if (q.leq(x, z) && q.leq(y, z)) ub.push_back(z);
      }
      if (!j) {
        CHECK(ub.empty());
        continue;
      }
      for (auto z : ub) CHECK(q.leq(*j, z));
    }
  }
}

TEST_CASE("f-vector sums to the element count") {
  for (const auto& p : {square(), three_lines()}) CHECK(f_vector(p).total() == p.size());
}

TEST_CASE("up-sets") {
  auto p = three_lines();
  auto u = up_set(p, p.at("l1"));
  CHECK(u.size() == 3);
  CHECK(u.id(u.bottom()) == "l1");
  CHECK(f_vector(u) == FVector{1, 2});

  auto q = square();
  auto v = up_set(q, q.at("1"));
  std::vector<Elem> all(v.size());
  for (Elem e = 0; e < v.size(); ++e) all[e] = e;
  CHECK(ids(v, all) == std::set<std::string>{"1", "12", "14", "1234"});
  CHECK(v.rank(v.at("1234")) == 2);

  auto whole = up_set(q, q.bottom());
  CHECK(whole.size() == q.size());
}

TEST_CASE("shadows") {
  auto q = square();
  CHECK(ids(q, shadow(q, 2)) == std::set<std::string>{"12", "14", "23", "34"});
  CHECK(shadow(q, 3).empty());
  CHECK(shadow(q, 7).empty());
  CHECK(shadow(q, 0).size() == 1);
}

TEST_CASE("intervals") {
  auto q = square();
  auto a = interval(q, q.at("12"), q.at("12"));
  CHECK(a.is_chain);
  CHECK(a.elements.size() == 1);
  auto b = interval(q, q.bottom(), q.at("12"));
  CHECK_FALSE(b.is_chain);
  CHECK(ids(q, b.elements) == std::set<std::string>{"0", "1", "2", "12"});
  auto p = three_lines();
  CHECK(interval(p, p.bottom(), p.at("l1")).is_chain);
  CHECK_THROWS_AS(interval(q, q.at("1"), q.at("2")), PreconditionError);
}

TEST_CASE("json round trip") {
  auto q = square();
  auto back = poset_from_json(to_json(q));
  std::vector<Elem> map(q.size());
  for (Elem e = 0; e < q.size(); ++e) map[e] = back.at(q.id(e));
  CHECK(is_rank_isomorphism(q, back, map));
}
