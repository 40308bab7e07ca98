#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "mslat/corpus.hpp"
#include "mslat/error.hpp"
#include "mslat/exterior.hpp"
#include "mslat/field.hpp"
#include "mslat/fixtures.hpp"
#include "mslat/generic_matrix.hpp"
#include "mslat/properties.hpp"

using namespace mslat;

namespace {

using F = GF2_64;

std::string face_id(const Face& f) {
  if (f.empty()) return "0";
  std::string s;
  for (auto v : f) s += std::to_string(v);
  return s;
}

RankedPoset face_poset(const FaceSet& complex) {
  std::vector<ElementDecl> e;
  std::vector<CoverDecl> c;
  for (const auto& f : complex) {
    e.push_back({face_id(f), static_cast<long long>(f.size())});
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g = f;
      g.erase(g.begin() + static_cast<long>(i));
      c.push_back({face_id(g), face_id(f)});
    }
  }
  return RankedPoset::build(e, c);
}

// Down-closure of a few random faces on n vertices, all vertices included.
FaceSet random_complex(Rng& rng, unsigned n) {
  FaceSet out{Face{}};
  for (unsigned v = 1; v <= n; ++v) out.insert(Face{v});
  const unsigned gens = 1 + draw(rng, 5);
  for (unsigned g = 0; g < gens; ++g) {
    Face top;
    for (unsigned v = 1; v <= n; ++v) {
      if (draw(rng, 2)) top.push_back(v);
    }
    for (unsigned mask = 0; mask < (1u << top.size()); ++mask) {
      Face f;
      for (std::size_t i = 0; i < top.size(); ++i) {
        if (mask >> i & 1) f.push_back(top[i]);
      }
      out.insert(f);
    }
  }
  return out;
}

std::vector<Face> all_subsets(unsigned n, unsigned k) {
  std::vector<Face> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    Face f;
    for (unsigned v = 1; v <= n; ++v) {
      if (mask >> (v - 1) & 1) f.push_back(v);
    }
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Shift of a simplicial complex by multiplying out y_{s_1} ^ ... ^ y_{s_k}
// term by term (characteristic 2, so no signs) and dropping non-faces.
FaceSet wedge_oracle(const FaceSet& complex, unsigned n, std::uint64_t seed) {
  GenericMatrix<F> g(n, seed);
  FaceSet out{Face{}};
  unsigned top = 0;
  for (const auto& f : complex) top = std::max<unsigned>(top, static_cast<unsigned>(f.size()));
  for (unsigned k = 1; k <= top; ++k) {
    std::vector<Face> cols;
    for (const auto& f : complex) {
      if (f.size() == k) cols.push_back(f);
    }
    std::vector<std::vector<F::value_type>> rows;
    std::size_t rank = 0;
    for (const auto& s : all_subsets(n, k)) {
      std::map<Face, F::value_type> terms{{Face{}, F::one()}};
      for (auto si : s) {
        std::map<Face, F::value_type> next;
        for (const auto& [t, coef] : terms) {
          for (unsigned j = 1; j <= n; ++j) {
            if (std::find(t.begin(), t.end(), j) != t.end()) continue;
            Face u = t;
            u.insert(std::upper_bound(u.begin(), u.end(), j), j);
            next[u] = F::add(next[u], F::mul(coef, g.at(si - 1, j - 1)));
          }
        }
        terms = std::move(next);
      }
      std::vector<F::value_type> row;
      for (const auto& c : cols) row.push_back(terms.count(c) ? terms[c] : F::zero());
      rows.push_back(row);
      auto r = matrix_rank<F>(rows);
      if (r > rank) {
        out.insert(s);
        rank = r;
      } else {
        rows.pop_back();
      }
    }
  }
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

}  // namespace

TEST_CASE("projection onto the face ring") {
  ExteriorFaceRing pencil(fixture_poset("pencil"));
  CHECK(pencil.atom_count() == 3);
  CHECK(pencil.graded_dimensions() == FVector{1, 3, 1});
  const auto& p = pencil.lattice();
  CHECK(p.id(*pencil.project({1, 2})) == "p");
  CHECK(pencil.project({1, 2}) == pencil.project({2, 3}));
  CHECK_FALSE(pencil.project({1, 2, 3}).has_value());
  CHECK(pencil.project({}) == p.bottom());

  ExteriorFaceRing lines(fixture_poset("3lines"));
  CHECK_FALSE(project_subset(lines, {1, 2, 3}).has_value());
  CHECK(lines.lattice().id(*lines.project({1, 3})) == "p13");
  CHECK(lines.graded_dimensions() == FVector{1, 3, 3});
  CHECK_THROWS_AS(lines.project({4}), PreconditionError);

  CHECK_THROWS_AS(ExteriorFaceRing(fixture_poset("square")), PreconditionError);
}

TEST_CASE("shifted families with f = (1,4,4) and (1,3,1) are unique") {
  auto edges = all_subsets(4, 2);
  int found = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    FaceSet fam;
    for (unsigned i = 0; i < 6; ++i) {
      if (mask >> i & 1) fam.insert(edges[i]);
    }
    if (check_shifted(fam).pass()) {
      ++found;
      CHECK(fam == faces_of({"12", "13", "14", "23"}));
    }
  }
  CHECK(found == 1);
  int found3 = 0;
  for (const auto& e : all_subsets(3, 2)) {
    if (check_shifted({e}).pass()) {
      ++found3;
      CHECK(e == Face{1, 2});
    }
  }
  CHECK(found3 == 1);
}

TEST_CASE("shifts of the fixtures") {
  CHECK(shift_exterior(fixture_poset("c4"), {}) == faces_of({"", "1", "2", "3", "4", "12", "13", "14", "23"}));
  CHECK(shift_exterior(fixture_poset("pencil"), {}) == faces_of({"", "1", "2", "3", "12"}));
  auto tri = faces_of({"", "1", "2", "3", "12", "13", "23", "123"});
  CHECK(shift_exterior(fixture_poset("triangle-complex"), {}) == tri);
}

TEST_CASE("shifting agrees with explicit wedge products on small complexes") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(draw(rng, 5));
    auto complex = random_complex(rng, n);
    auto p = face_poset(complex);
    const std::uint64_t seed = 1 + static_cast<std::uint64_t>(i);
    auto got = shift_exterior(p, ShiftOptions{seed, std::nullopt});
    CHECK(got == wedge_oracle(complex, n, seed));
    CHECK(face_f_vector(got) == f_vector(p));
  }
}

TEST_CASE("shifting geometric semi-lattices") {
  Rng rng(32);
  for (int i = 0; i < 25; ++i) {
    auto g = random_geometric(rng, 7);
    auto s = shift_exterior(g, ShiftOptions{5, 6});
    CHECK(face_f_vector(s) == f_vector(g));
    CHECK(check_shifted(s).pass());
    CHECK(check_complex(s).pass());
    CHECK(check_kk(face_f_vector(s)).pass());
  }
}

TEST_CASE("Bjorner's complex") {
  auto c4 = fixture_poset("c4");
  auto b = bjorner_delta(c4, {});
  CHECK(b == faces_of({"", "1", "2", "3", "4", "12", "14", "23", "34"}));
  CHECK(b != shift_exterior(c4, {}));

  auto pencil = fixture_poset("pencil");
  CHECK(bjorner_delta(pencil, {}) == faces_of({"", "1", "2", "3", "12"}));
  std::vector<Elem> reversed{pencil.at("l3"), pencil.at("l2"), pencil.at("l1")};
  CHECK(bjorner_delta(pencil, reversed) == faces_of({"", "1", "2", "3", "23"}));
  CHECK_THROWS_AS(bjorner_delta(pencil, {pencil.at("l1")}), PreconditionError);
  CHECK_THROWS_AS(bjorner_delta(fixture_poset("square"), {}), PreconditionError);

  Rng rng(33);
  for (int i = 0; i < 25; ++i) {
    auto g = random_geometric(rng, 7);
    auto d = bjorner_delta(g, {});
    CHECK(face_f_vector(d) == f_vector(g));
    CHECK(check_complex(d).pass());
  }
}

TEST_CASE("face f-vectors") {
  CHECK(face_f_vector(faces_of({"", "1", "2", "12"})) == FVector{1, 2, 1});
  CHECK_THROWS_AS(face_f_vector(faces_of({"1"})), InvariantError);
}
