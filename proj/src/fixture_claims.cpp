#include <functional>
#include <sstream>

#include "mslat/exterior.hpp"
#include "mslat/fixtures.hpp"
#include "mslat/lprime.hpp"
#include "mslat/properties.hpp"
#include "mslat/symmetric.hpp"

namespace mslat {

namespace {

std::string faces_str(const FaceSet& faces) {
  std::string out;
  for (const auto& f : faces) out += (out.empty() ? "" : " ") + face_str(f);
  return out;
}

std::string monomials_str(const MonomialSet& m) {
  std::string out;
  for (const auto& x : m) out += (out.empty() ? "" : " ") + x.str();
  return out;
}

FaceSet faces_of(std::initializer_list<const char*> words) {
  FaceSet out;
  for (std::string w : words) {
    Face f;
    for (char c : w) f.push_back(static_cast<unsigned>(c - '0'));
    out.insert(f);
  }
  return out;
}

MonomialSet monomials_of(std::initializer_list<const char*> words) {
  MonomialSet out;
  for (const char* w : words) out.insert(parse_monomial(w));
  return out;
}

class Claims {
 public:
  void add(std::string fixture, std::string claim, const std::function<std::pair<bool, std::string>()>& fn) {
    FixtureClaim c{std::move(fixture), std::move(claim), false, {}};
    try {
      auto [ok, detail] = fn();
      c.ok = ok;
      c.detail = std::move(detail);
    } catch (const std::exception& e) {
      c.detail = std::string("threw: ") + e.what();
    }
    out.push_back(std::move(c));
  }

  void f_vector_is(const std::string& name, const FVector& want) {
    add(name, "f-vector " + want.str(), [&] {
      auto got = f_vector(fixture_poset(name));
      return std::pair{got == want, got.str()};
    });
  }

  std::vector<FixtureClaim> out;
};

std::pair<bool, std::string> shows(bool ok, std::string detail) { return {ok, std::move(detail)}; }

}  // namespace

std::vector<FixtureClaim> verify_fixtures() {
  Claims c;

  c.f_vector_is("square", {1, 4, 4, 1});
  c.add("square", "diamond and parallelogram hold", [] {
    auto p = fixture_poset("square");
    return shows(check_diamond(p).pass() && check_parallelogram(p).pass(), "");
  });
  c.add("square", "atoms 1 and 3 break the rank inequality", [] {
    auto p = fixture_poset("square");
    auto v = check_geometric(p);
    if (v.pass()) return shows(false, "geometric");
    std::string d = p.id(v.witness->x) + "," + p.id(v.witness->y);
    return shows(d == "1,3", d);
  });
  c.add("square", "{1,3} is a minimal atom set of 1234 with fewer than 3 atoms", [] {
    auto p = fixture_poset("square");
    auto v = check_min_atom_rank(p);
    if (v.pass()) return shows(false, "no witness");
    std::string d = p.id(v.witness->l) + ":";
    for (auto a : v.witness->atoms) d += " " + p.id(a);
    return shows(d == "1234: 1 3", d);
  });

  c.f_vector_is("square-lprime", {1, 4, 8, 13});
  c.add("square-lprime", "the 13 multichains of rank 3", [] {
    auto p = fixture_poset("square-lprime");
    std::string d;
    for (auto e : p.rank_level(3)) d += (d.empty() ? "" : " ") + p.id(e);
    return shows(d == "(1,1,1) (1,12) (1,14) (2,2,2) (2,12) (2,23) (3,3,3) (3,23) (3,34) (4,4,4) (4,14) (4,34) (1234)",
                 d);
  });
  c.add("square-lprime", "Macaulay bound met with equality in ranks 2 and 3", [] {
    auto r = verify_shadow_theorem(fixture_poset("square-lprime"), BoundKind::Macaulay);
    std::ostringstream d;
    bool ok = r.pass() && r.rows.size() == 3;
    for (const auto& row : r.rows) {
      d << "k=" << row.k << " f=" << row.f_k << " bound=" << row.bound << " actual=" << row.actual << "; ";
    }
    ok = ok && r.rows[1].bound == 4 && r.rows[1].actual == 4 && r.rows[2].bound == 8 && r.rows[2].actual == 8;
    return shows(ok, d.str());
  });
  c.add("square-lprime", "parallelogram holds, diamond fails", [] {
    auto p = fixture_poset("square-lprime");
    return shows(check_parallelogram(p).pass() && !check_diamond(p).pass(), "");
  });

  auto shift_claim = [&](const std::string& name, const FaceSet& want) {
    c.add(name, "exterior shift " + faces_str(want), [name, want] {
      auto got = shift_exterior(fixture_poset(name), ShiftOptions{1, 2});
      return shows(got == want, faces_str(got));
    });
  };
  c.f_vector_is("c4", {1, 4, 4});
  shift_claim("c4", faces_of({"", "1", "2", "3", "4", "12", "13", "14", "23"}));
  c.add("c4", "Bjorner complex is the 4-cycle itself", [] {
    auto got = bjorner_delta(fixture_poset("c4"), {});
    auto want = faces_of({"", "1", "2", "3", "4", "12", "14", "23", "34"});
    return shows(got == want, faces_str(got));
  });
  c.f_vector_is("triangle", {1, 3, 3});
  shift_claim("triangle", faces_of({"", "1", "2", "3", "12", "13", "23"}));
  c.f_vector_is("triangle-complex", {1, 3, 3, 1});
  shift_claim("triangle-complex", faces_of({"", "1", "2", "3", "12", "13", "23", "123"}));
  c.f_vector_is("3lines", {1, 3, 3});
  shift_claim("3lines", faces_of({"", "1", "2", "3", "12", "13", "23"}));
  c.f_vector_is("pencil", {1, 3, 1});
  shift_claim("pencil", faces_of({"", "1", "2", "3", "12"}));

  c.f_vector_is("tree", {1, 4, 2, 1});
  c.add("tree", "parallelogram holds", [] { return shows(check_parallelogram(fixture_poset("tree")).pass(), ""); });

  auto symmetric_claim = [&](const std::string& name, const MonomialSet& want) {
    c.add(name, "symmetric shift " + monomials_str(want), [name, want] {
      auto p = pposet_from_json(fixture_json(name));
      auto got = shift_symmetric(p, ShiftOptions{1, 2});
      return shows(got == want && check_parallelogram(p.poset()).pass(), monomials_str(got));
    });
  };
  c.f_vector_is("multicomplex-1221", {1, 2, 2, 1});
  symmetric_claim("multicomplex-1221", monomials_of({"1", "x1", "x2", "x1^2", "x1x2", "x1^3"}));
  c.f_vector_is("pencil-extended", {1, 3, 2, 1});
  symmetric_claim("pencil-extended", monomials_of({"1", "x1", "x2", "x3", "x1^2", "x1x2", "x1^3"}));

  return std::move(c.out);
}

}  // namespace mslat
