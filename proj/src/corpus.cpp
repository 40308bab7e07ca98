#include "mslat/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mslat/error.hpp"
#include "mslat/properties.hpp"

namespace mslat {

std::optional<RankedPoset> random_layered(Rng& rng, const LayeredOptions& opt) {
  const std::size_t total = 1 + draw(rng, std::max<std::size_t>(opt.max_elements, 1));
  // Split the non-bottom elements into nonempty levels.
  std::vector<std::size_t> levels{1};
  std::size_t left = total - 1;
  while (left > 0) {
    std::size_t take = 1 + draw(rng, std::min<std::size_t>(left, 4));
    levels.push_back(take);
    left -= take;
  }
  std::vector<ElementDecl> elems;
  std::vector<std::vector<std::string>> by_rank(levels.size());
  std::size_t next = 0;
  for (std::size_t r = 0; r < levels.size(); ++r) {
    for (std::size_t i = 0; i < levels[r]; ++i) {
      std::string id = "v" + std::to_string(next++);
      elems.push_back({id, static_cast<long long>(r)});
      by_rank[r].push_back(id);
    }
  }
  std::vector<CoverDecl> covers;
  for (std::size_t r = 1; r < levels.size(); ++r) {
    const auto& below = by_rank[r - 1];
    for (const auto& id : by_rank[r]) {
      std::size_t hi = std::min(opt.max_lower_covers, below.size());
      std::size_t lo = r >= 2 ? std::min(opt.min_lower_covers, hi) : 1;
      std::size_t want = lo + draw(rng, hi - lo + 1);
      std::vector<std::size_t> idx(below.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      for (std::size_t i = 0; i < want; ++i) {
        std::swap(idx[i], idx[i + draw(rng, idx.size() - i)]);
        covers.push_back({below[idx[i]], id});
      }
    }
  }
  try {
    return RankedPoset::build(std::move(elems), std::move(covers));
  } catch (const PosetError&) {
    return std::nullopt;
  }
}

std::vector<RankedPoset> random_corpus(std::uint64_t seed, std::size_t count, const LayeredOptions& opt) {
  Rng rng(seed);
  std::vector<RankedPoset> out;
  while (out.size() < count) {
    if (auto p = random_layered(rng, opt)) out.push_back(std::move(*p));
  }
  return out;
}

std::vector<RankedPoset> diamond_corpus(std::uint64_t seed, std::size_t count, std::size_t max_elements) {
  Rng rng(seed);
  LayeredOptions opt;
  opt.max_elements = max_elements;
  opt.min_lower_covers = 2;
  opt.max_lower_covers = 4;
  std::vector<RankedPoset> out;
  while (out.size() < count) {
    auto p = random_layered(rng, opt);
    if (!p || !check_diamond(*p).pass()) continue;
    // Posets of rank <= 1 pass trivially; keep only a quarter of them.
    if (p->max_rank() < 2 && draw(rng, 4) != 0) continue;
    out.push_back(std::move(*p));
  }
  return out;
}

namespace {

using Vec = std::vector<unsigned>;

// Row reduction over GF(q); returns the rank of the given vectors.
unsigned rank_mod(std::vector<Vec> rows, unsigned q) {
  auto inv = [q](unsigned a) {
    unsigned r = 1;
    for (unsigned e = q - 2, b = a; e; e >>= 1, b = b * b % q) {
      if (e & 1) r = r * b % q;
    }
    return r;
  };
  unsigned rank = 0;
  const std::size_t dim = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    unsigned s = inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = v * s % q;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      unsigned f = rows[r][col];
      for (std::size_t c = 0; c < dim; ++c) rows[r][c] = (rows[r][c] + (q - f) * rows[rank][c]) % q;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RankedPoset random_geometric(Rng& rng, unsigned max_atoms) {
  static constexpr unsigned primes[] = {2, 3, 5};
  const unsigned q = primes[draw(rng, 3)];
  const unsigned dim = 2 + static_cast<unsigned>(draw(rng, 3));
  const unsigned want = 2 + static_cast<unsigned>(draw(rng, std::max(max_atoms, 2u) - 1));

  // Distinct projective points, so that every vector is its own atom.
  std::vector<Vec> points;
  auto normalized = [q](Vec v) {
    auto it = std::find_if(v.begin(), v.end(), [](unsigned x) { return x != 0; });
    unsigned lead = *it, s = 1;
    while (lead * s % q != 1) ++s;
    for (auto& x : v) x = x * s % q;
    return v;
  };
  for (unsigned tries = 0; points.size() < want && tries < 200; ++tries) {
    Vec v(dim);
    for (auto& x : v) x = static_cast<unsigned>(draw(rng, q));
    if (std::all_of(v.begin(), v.end(), [](unsigned x) { return x == 0; })) continue;
    v = normalized(v);
    if (std::find(points.begin(), points.end(), v) == points.end()) points.push_back(v);
  }
  const unsigned n = static_cast<unsigned>(points.size());

  // Flats as atom bitmasks, closed by span membership.
  auto rank_of = [&](std::uint32_t mask) {
    std::vector<Vec> rows;
    for (unsigned i = 0; i < n; ++i) {
      if (mask >> i & 1) rows.push_back(points[i]);
    }
    return rank_mod(rows, q);
  };
  auto closure = [&](std::uint32_t mask) {
    unsigned r = rank_of(mask);
    for (unsigned i = 0; i < n; ++i) {
      if (!(mask >> i & 1) && rank_of(mask | (1u << i)) == r) mask |= 1u << i;
    }
    return mask;
  };
  std::map<std::uint32_t, unsigned> flats{{0u, 0u}};
  std::vector<std::uint32_t> frontier{0u};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto f : frontier) {
      for (unsigned i = 0; i < n; ++i) {
        if (f >> i & 1) continue;
        auto g = closure(f | (1u << i));
        if (flats.emplace(g, rank_of(g)).second) next.push_back(g);
      }
    }
    frontier = std::move(next);
  }

  // Random down-set: drop a few flats together with everything above them,
  // never touching the atoms.
  std::set<std::uint32_t> dropped;
  std::vector<std::uint32_t> high;
  for (const auto& [f, r] : flats) {
    if (r >= 2) high.push_back(f);
  }
  std::size_t cuts = high.empty() ? 0 : draw(rng, std::min<std::size_t>(high.size(), 4) + 1);
  for (std::size_t c = 0; c < cuts; ++c) {
    auto f = high[draw(rng, high.size())];
    for (auto g : high) {
      if ((g & f) == f) dropped.insert(g);
    }
  }

  auto name = [&](std::uint32_t f) {
    if (f == 0) return std::string("0");
    std::string s;
    for (unsigned i = 0; i < n; ++i) {
      if (!(f >> i & 1)) continue;
      if (!s.empty()) s += "-";
      s += std::to_string(i + 1);
    }
    return s;
  };
  std::vector<ElementDecl> elems;
  std::vector<CoverDecl> covers;
  for (const auto& [f, r] : flats) {
    if (dropped.count(f)) continue;
    elems.push_back({name(f), r});
    for (const auto& [g, rg] : flats) {
      if (rg == r + 1 && (g & f) == f && !dropped.count(g)) covers.push_back({name(f), name(g)});
    }
  }
  return RankedPoset::build(std::move(elems), std::move(covers));
}

MonomialSet random_order_ideal(Rng& rng, unsigned max_vars, std::size_t max_monomials) {
  const unsigned vars = 1 + static_cast<unsigned>(draw(rng, std::max(max_vars, 1u)));
  MonomialSet out{Monomial()};
  const std::size_t gens = 1 + draw(rng, 4);
  for (std::size_t g = 0; g < gens; ++g) {
    std::vector<unsigned> e(vars);
    for (auto& x : e) x = static_cast<unsigned>(draw(rng, 4));
    // Add the generator's divisors one at a time, stopping at the cap.
    std::vector<Monomial> todo{Monomial(e)};
    MonomialSet closure;
    while (!todo.empty()) {
      auto m = todo.back();
      todo.pop_back();
      if (!closure.insert(m).second) continue;
      for (auto v : m.support()) todo.push_back(m.divided(v));
    }
    MonomialSet merged = out;
    merged.insert(closure.begin(), closure.end());
    if (merged.size() <= max_monomials) out = std::move(merged);
  }
  return out;
}

}  // namespace mslat
