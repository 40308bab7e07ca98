// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mslat/bounds.hpp"
#include "mslat/corpus.hpp"
#include "mslat/error.hpp"
#include "mslat/exterior.hpp"
#include "mslat/fixtures.hpp"
#include "mslat/lprime.hpp"
#include "mslat/properties.hpp"
#include "mslat/symmetric.hpp"

using namespace mslat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first few failures; the rest are only counted.
struct Tally {
  std::size_t failures = 0;
  std::ostringstream first;
  void fail(const std::string& what) {
    if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failures) + " failures: " + first.str()};
  }
};

const std::vector<RankedPoset>& shared_corpus() {
  static const auto corpus = random_corpus(1, 1000, LayeredOptions{});
  return corpus;
}

std::string fv(const RankedPoset& p) { return f_vector(p).str(); }

Outcome figure_two() {
  auto t = Clock::now();
  auto lp = build_lprime(fixture_poset("square"), RankBounded{});
  std::set<std::string> got;
  for (Elem e = 0; e < lp.poset.size(); ++e) {
    if (lp.poset.rank(e) > 0) got.insert(lp.chains[e].str());
  }
  const std::set<std::string> want{"(1)",     "(2)",     "(3)",     "(4)",     "(1,1)",  "(2,2)",  "(3,3)",
                                   "(4,4)",   "(12)",    "(14)",    "(23)",    "(34)",   "(1,1,1)", "(2,2,2)",
                                   "(3,3,3)", "(4,4,4)", "(1,12)",  "(1,14)",  "(2,12)", "(2,23)", "(3,23)",
                                   "(3,34)",  "(4,14)",  "(4,34)",  "(1234)"};
  const double s = seconds_since(t);
  Tally tally;
  if (got != want) tally.fail("element set differs");
  if (f_vector(lp.poset) != FVector{1, 4, 8, 13}) tally.fail("f-vector " + fv(lp.poset));
  if (s >= 1.0) tally.fail("took " + std::to_string(s) + " s");
  return tally.outcome(std::to_string(got.size()) + " elements above the bottom, f = " + fv(lp.poset));
}

Outcome figure_two_margins() {
  auto r = verify_shadow_theorem(fixture_poset("square-lprime"), BoundKind::Macaulay);
  Tally tally;
  std::ostringstream d;
  for (const auto& row : r.rows) d << "k=" << row.k << " bound=" << row.bound << " actual=" << row.actual << " ";
  if (r.rows.size() != 3) {
    tally.fail("expected 3 rows");
  } else {
    if (r.rows[1].bound != 4 || r.rows[1].actual != 4) tally.fail("k=1 row");
    if (r.rows[2].bound != 8 || r.rows[2].actual != 8) tally.fail("k=2 row");
  }
  return tally.outcome(d.str());
}

// Smallest universe that holds the extremal family, plus one.
unsigned universe_for(std::uint64_t n, unsigned k, ShadowMode mode) {
  for (unsigned u = 1;; ++u) {
    Natural objects = mode == ShadowMode::Sets ? binomial(u, k) : binomial(u + k - 1, k);
    if (objects >= n) return u + 1;
  }
}

Outcome bounds_vs_search() {
  auto t = Clock::now();
  Tally tally;
  int cases = 0;
  for (unsigned k = 1; k <= 4; ++k) {
    for (std::uint64_t n = 1; n <= 30; ++n) {
      for (auto mode : {ShadowMode::Sets, ShadowMode::Monomials}) {
        const bool sets = mode == ShadowMode::Sets;
        const Natural bound = sets ? kk_shadow_bound(n, k) : macaulay_shadow_bound(n, k);
        const auto best = brute_min_shadow(n, k, mode, universe_for(n, k, mode));
        ++cases;
        if (bound != best) {
          tally.fail(std::string(sets ? "kk" : "macaulay") + " n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
  }
  const double s = seconds_since(t);
  if (s >= 300) tally.fail("took " + std::to_string(s) + " s");
  return tally.outcome(std::to_string(cases) + " cases");
}

Outcome diamond_vs_star() {
  Tally tally;
  std::size_t diamonds = 0;
  for (std::size_t i = 0; i < shared_corpus().size(); ++i) {
    const auto& p = shared_corpus()[i];
    const bool d = check_diamond(p).pass();
    diamonds += d;
    if (d != check_condition_star(p).pass()) tally.fail("poset " + std::to_string(i));
  }
  return tally.outcome(std::to_string(shared_corpus().size()) + " posets, " + std::to_string(diamonds) +
                       " with the diamond property");
}

Outcome shadow_theorems() {
  Tally kk, mac;
  std::size_t diamonds = 0, parallelograms = 0;
  for (std::size_t i = 0; i < shared_corpus().size(); ++i) {
    const auto& p = shared_corpus()[i];
    if (check_diamond(p).pass()) {
      ++diamonds;
      if (!check_kk(f_vector(p)).pass() || !verify_shadow_theorem(p, BoundKind::KruskalKatona).pass()) {
        kk.fail("poset " + std::to_string(i) + " f=" + fv(p));
      }
    }
    if (check_parallelogram(p).pass()) {
      ++parallelograms;
      if (!check_macaulay(f_vector(p)).pass() || !verify_shadow_theorem(p, BoundKind::Macaulay).pass()) {
        mac.fail("poset " + std::to_string(i) + " f=" + fv(p));
      }
    }
  }
  auto a = kk.outcome(std::to_string(diamonds) + " diamond posets meet the KK bounds");
  auto b = mac.outcome(std::to_string(parallelograms) + " parallelogram posets against Macaulay");
  return {a.ok && b.ok, a.detail + " (" + std::to_string(kk.failures) + " exceptions); " + b.detail};
}

Outcome lprime_parallelogram() {
  auto t = Clock::now();
  Tally tally;
  const auto corpus = diamond_corpus(7, 200, 12);
  const char* names[] = {"identity", "chains", "rank-bounded"};
  std::size_t largest = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    int s = 0;
    for (FamilySpec spec : {FamilySpec{Identity{}}, FamilySpec{Chains{}}, FamilySpec{RankBounded{}}}) {
      auto lp = build_lprime(corpus[i], spec);
      largest = std::max(largest, lp.poset.size());
      if (!check_parallelogram(lp.poset).pass()) tally.fail(std::string(names[s]) + ", poset " + std::to_string(i));
      ++s;
    }
  }
  const double sec = seconds_since(t);
  if (sec >= 300) tally.fail("took " + std::to_string(sec) + " s");
  return tally.outcome(std::to_string(corpus.size()) + " carriers x 3 families, largest L' " +
                       std::to_string(largest) + " elements");
}

Outcome multicomplex_round_trip() {
  Tally tally;
  Rng rng(11);
  std::size_t biggest = 0;
  for (int i = 0; i < 100; ++i) {
    auto m = random_order_ideal(rng, 4, 200);
    biggest = std::max(biggest, m.size());
    try {
      auto enc = encode_multicomplex(m);
      const auto& mono = enc.monomials;
      const auto& lp = enc.lprime.poset;
      if (f_vector(lp) != monomial_f_vector(m)) tally.fail("f-vector, ideal " + std::to_string(i));
      // Rank isomorphism checked pair by pair.
      std::set<Elem> image(enc.bijection.begin(), enc.bijection.end());
      if (image.size() != mono.size() || lp.size() != mono.size()) tally.fail("not a bijection, ideal " + std::to_string(i));
      for (Elem a = 0; a < mono.size(); ++a) {
        if (mono.rank(a) != lp.rank(enc.bijection[a])) tally.fail("rank, ideal " + std::to_string(i));
        for (Elem b = 0; b < mono.size(); ++b) {
          if (mono.leq(a, b) != lp.leq(enc.bijection[a], enc.bijection[b])) {
            tally.fail("order, ideal " + std::to_string(i));
          }
        }
      }
    } catch (const Error& e) {
      tally.fail("ideal " + std::to_string(i) + ": " + e.what());
    }
  }
  std::string chain;
  for (const auto& s : support_chain(parse_monomial("x1^5x2x4^3"))) {
    chain += "{";
    for (std::size_t j = 0; j < s.size(); ++j) chain += (j ? "," : "") + std::to_string(s[j]);
    chain += "}";
  }
  if (chain != "{1,2,4}{1,4}{1,4}{1}{1}") tally.fail("f(x1^5x2x4^3) = " + chain);
  return tally.outcome("100 ideals up to " + std::to_string(biggest) + " monomials; f(x1^5x2x4^3) top-down " + chain);
}

FaceSet faces_from_ids(const RankedPoset& p) {
  FaceSet out;
  for (Elem e = 0; e < p.size(); ++e) {
    Face f;
    if (p.rank(e) > 0) {
      for (char c : p.id(e)) f.push_back(static_cast<unsigned>(c - '0'));
    }
    out.insert(f);
  }
  return out;
}

void check_exterior_instance(const std::string& name, const RankedPoset& p, Tally& tally, double& slowest) {
  auto t = Clock::now();
  try {
    auto d = shift_exterior(p, ShiftOptions{1, 2});
    if (face_f_vector(d) != f_vector(p)) tally.fail(name + ": f-vector");
    if (!check_complex(d).pass()) tally.fail(name + ": not a complex");
    if (!check_shifted(d).pass()) tally.fail(name + ": not shifted");
    if (shift_exterior(p, ShiftOptions{77, std::nullopt}) != d) tally.fail(name + ": seed 77 differs");
  } catch (const Error& e) {
    tally.fail(name + ": " + e.what());
  }
  const double s = seconds_since(t);
  slowest = std::max(slowest, s);
  if (s >= 120) tally.fail(name + ": took " + std::to_string(s) + " s");
}

Outcome exterior_shifting() {
  Tally tally;
  double slowest = 0;
  std::size_t fixtures = 0;
  for (const auto& name : fixture_names()) {
    auto p = fixture_poset(name);
    if (!check_geometric(p).pass()) continue;
    ++fixtures;
    check_exterior_instance(name, p, tally, slowest);
  }
  Rng rng(8);
  for (int i = 0; i < 50; ++i) check_exterior_instance("random " + std::to_string(i), random_geometric(rng, 8), tally, slowest);

  auto c4 = fixture_poset("c4");
  auto d = shift_exterior(c4, {});
  FaceSet edges;
  for (const auto& f : d) {
    if (f.size() == 2) edges.insert(f);
  }
  if (edges != FaceSet{{1, 2}, {1, 3}, {1, 4}, {2, 3}}) tally.fail("c4 edges");
  if (d == faces_from_ids(c4)) tally.fail("c4 shifts to itself");
  std::ostringstream s;
  s << fixtures << " geometric fixtures + 50 random, slowest " << slowest << " s; c4 edges";
  for (const auto& f : edges) s << " " << face_str(f);
  return tally.outcome(s.str());
}

Outcome bjorner() {
  Tally tally;
  std::string names;
  for (const char* name : {"c4", "triangle", "triangle-complex"}) {
    auto p = fixture_poset(name);
    names += std::string(names.empty() ? "" : ", ") + name;
    if (bjorner_delta(p, {}) != faces_from_ids(p)) tally.fail(std::string(name) + " is not reproduced");
  }
  auto c4 = fixture_poset("c4");
  if (bjorner_delta(c4, {}) == shift_exterior(c4, {})) tally.fail("c4 agrees with the exterior shift");
  return tally.outcome("reproduced " + names + "; differs from the shift on c4");
}

// Renumbers the variables that occur to x1..xm.
MonomialSet compress(const MonomialSet& m) {
  std::set<std::size_t> used;
  for (const auto& mono : m) {
    for (auto j : mono.support()) used.insert(j);
  }
  MonomialSet out;
  for (const auto& mono : m) {
    std::vector<unsigned> e;
    for (auto j : used) e.push_back(mono.exponent(j));
    out.insert(Monomial(e));
  }
  return out;
}

void check_symmetric_instance(const std::string& name, const PPoset& p, Tally& tally, double& slowest) {
  auto t = Clock::now();
  try {
    auto d = shift_symmetric(p, ShiftOptions{1, 2});
    if (!check_order_ideal(d).pass()) tally.fail(name + ": not an order ideal");
    if (monomial_f_vector(d) != f_vector(p.poset())) tally.fail(name + ": f-vector");
    if (shift_symmetric(p, ShiftOptions{77, std::nullopt}) != d) tally.fail(name + ": seed 77 differs");
    MonomialSet previous;
    for (unsigned r = 0; r <= p.poset().max_rank(); ++r) {
      auto cur = shift_symmetric(truncate(p, r), ShiftOptions{1, std::nullopt});
      for (const auto& m : previous) {
        if (!cur.count(m)) tally.fail(name + ": truncation at rank " + std::to_string(r) + " loses " + m.str());
      }
      previous = std::move(cur);
    }
    if (previous != d) tally.fail(name + ": full truncation differs");
  } catch (const Error& e) {
    tally.fail(name + ": " + e.what());
  }
  const double s = seconds_since(t);
  slowest = std::max(slowest, s);
  if (s >= 120) tally.fail(name + ": took " + std::to_string(s) + " s");
}

Outcome symmetric_shifting() {
  Tally tally;
  double slowest = 0;
  for (const char* name : {"multicomplex-1221", "pencil-extended"}) {
    check_symmetric_instance(name, pposet_from_json(fixture_json(name)), tally, slowest);
  }
  // The same two extension steps, taken directly.
  auto seed = seed_from_geometric(fixture_poset("pencil"));
  auto grown = extend(seed, seed.element_of(parse_monomial("x1")), 1);
  grown = extend(grown, grown.element_of(parse_monomial("x1^2")), 1);
  check_symmetric_instance("pencil + x1^2 + x1^3", grown, tally, slowest);

  Rng rng(10);
  int made = 0;
  while (made < 40) {
    auto m = random_order_ideal(rng, 3, 30);
    bool small = true;
    for (const auto& mono : m) small = small && mono.degree() <= 4;
    if (!small) continue;
    ++made;
    check_symmetric_instance("multicomplex " + std::to_string(made), pposet_from_multicomplex(compress(m)), tally,
                             slowest);
  }
  std::ostringstream s;
  s << "3 pencil/fixture instances + 40 multicomplexes, slowest " << slowest << " s";
  return tally.outcome(s.str());
}

Outcome bv_samples() {
  Tally tally;
  Rng rng(12);
  std::size_t with_one = 0;
  for (int i = 0; i < 100000; ++i) {
    const unsigned k = 1 + static_cast<unsigned>(draw(rng, 6));
    const bool one = draw(rng, 2) == 0;
    const std::size_t len = one ? k + 1 : 1 + draw(rng, k);
    std::vector<std::uint64_t> n(len);
    for (auto& x : n) x = draw(rng, 41);
    with_one += one;
    if (!bv_inequality_holds(n, k, one)) {
      std::string s;
      for (auto x : n) s += (s.empty() ? "" : ",") + std::to_string(x);
      tally.fail("k=" + std::to_string(k) + " n=(" + s + ")" + (one ? " with 1" : ""));
    }
  }
  return tally.outcome("100000 samples, " + std::to_string(with_one) + " of the second form");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"L' of the square reproduces the drawn poset", figure_two},
      {"Macaulay margins of L' of the square are tight", figure_two_margins},
      {"shadow bounds equal exhaustive minimum shadows", bounds_vs_search},
      {"diamond property iff condition (*)", diamond_vs_star},
      {"shadow bounds hold under diamond / parallelogram", shadow_theorems},
      {"L' of diamond posets has the parallelogram property", lprime_parallelogram},
      {"multicomplex encoding round trip", multicomplex_round_trip},
      {"exterior shifting", exterior_shifting},
      {"Bjorner's complex", bjorner},
      {"symmetric shifting", symmetric_shifting},
      {"Bjorner-Vrecica inequality samples", bv_samples},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << seconds_since(t)
              << " s): " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
