#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mslat/corpus.hpp"
#include "mslat/poset_json.hpp"
#include "mslat/properties.hpp"

using namespace mslat;

TEST_CASE("random corpora are reproducible and respect the size bound") {
  LayeredOptions opt;
  opt.max_elements = 9;
  auto a = random_corpus(3, 50, opt);
  auto b = random_corpus(3, 50, opt);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(to_json(a[i]) == to_json(b[i]));
    CHECK(a[i].size() <= 9);
  }
  auto c = random_corpus(4, 50, opt);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || to_json(a[i]) != to_json(c[i]);
  CHECK(differs);
  CHECK(random_corpus(3, 0, opt).empty());
}

TEST_CASE("the corpus is not all chains") {
  std::size_t non_chain = 0, diamond = 0;
  for (const auto& p : random_corpus(1, 300, LayeredOptions{})) {
    non_chain += p.size() > p.max_rank() + 1 ? 1 : 0;
    diamond += check_diamond(p).pass() ? 1 : 0;
  }
  CHECK(non_chain > 200);
  CHECK(diamond > 0);
  CHECK(diamond < 300);
}

TEST_CASE("diamond corpora") {
  auto d = diamond_corpus(5, 40, 12);
  CHECK(d.size() == 40);
  std::size_t tall = 0;
  for (const auto& p : d) {
    CHECK(check_diamond(p).pass());
    tall += p.max_rank() >= 2 ? 1 : 0;
  }
  CHECK(tall > 10);
}

TEST_CASE("random geometric semi-lattices") {
  Rng rng(6);
  for (int i = 0; i < 40; ++i) {
    auto g = random_geometric(rng, 8);
    CHECK(check_geometric(g).pass());
    CHECK(g.atoms().size() <= 8);
    CHECK(g.id(g.bottom()) == "0");
  }
}

TEST_CASE("random order ideals") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    auto m = random_order_ideal(rng, 4, 200);
    CHECK(check_order_ideal(m).pass());
    CHECK(m.size() <= 200);
    for (const auto& x : m) CHECK(x.variables() <= 4);
  }
}
