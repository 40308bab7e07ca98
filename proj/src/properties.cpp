#include "mslat/properties.hpp"

#include <algorithm>

#include "mslat/error.hpp"

namespace mslat {

namespace {

std::vector<Elem> bits(const Bitset& b) {
  std::vector<Elem> out;
  for (auto e = b.find_first(); e != Bitset::npos; e = b.find_next(e)) out.push_back(e);
  return out;
}

// Chain-intervals starting at `base`: for each top t with [base, t] a chain,
// the chain itself and whether it can still grow. [base, z] extends through an
// upper cover w of z exactly when z is the only lower cover of w above base.
struct ChainInterval {
  std::vector<Elem> chain;
  bool extendable = false;
};

std::vector<ChainInterval> chain_intervals(const RankedPoset& p, Elem base) {
  std::vector<ChainInterval> out;
  std::vector<Elem> chain{base};
  auto grow = [&](auto&& self) -> void {
    Elem z = chain.back();
    bool extendable = false;
    for (Elem w : p.upper_covers(z)) {
      std::size_t above_base = 0;
      for (Elem l : p.lower_covers(w)) above_base += p.leq(base, l) ? 1 : 0;
      if (above_base != 1) continue;
      extendable = true;
      chain.push_back(w);
      self(self);
      chain.pop_back();
    }
    if (chain.size() > 1) out.push_back({chain, extendable});
  };
  grow(grow);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.chain.size() != b.chain.size()) return a.chain.size() < b.chain.size();
    return a.chain.back() < b.chain.back();
  });
  return out;
}

}  // namespace

Verdict<DiamondWitness> check_diamond(const RankedPoset& p) {
  for (Elem x = 0; x < p.size(); ++x) {
    for (auto y : bits(p.above(x))) {
      if (p.rank(y) != p.rank(x) + 2) continue;
      std::size_t between = (p.above(x) & p.below(y)).count() - 2;
      if (between < 2) return {DiamondWitness{x, y}};
    }
  }
  return {};
}

Verdict<StarWitness> check_condition_star(const RankedPoset& p) {
  for (Elem base = 0; base < p.size(); ++base) {
    for (Elem x : p.upper_covers(base)) {
      for (auto y : bits(p.above(base))) {
        if (y == base) continue;
        bool found = false;
        for (Elem yp : p.lower_covers(y)) {
          if (p.leq(base, yp) && !p.leq(x, yp)) {
            found = true;
            break;
          }
        }
        if (!found) return {StarWitness{base, x, y}};
      }
    }
  }
  return {};
}

Verdict<ParallelogramWitness> check_parallelogram(const RankedPoset& p) {
  for (Elem base = 0; base < p.size(); ++base) {
    auto intervals = chain_intervals(p, base);
    if (intervals.empty()) continue;
    auto ups = bits(p.above(base));
    for (const auto& ci : intervals) {
      const auto& x = ci.chain;
      const unsigned r = static_cast<unsigned>(x.size()) - 1;
      for (auto y : ups) {
        if (y == base) continue;
        const unsigned rho = p.rank(y) - p.rank(base);
        if (r >= rho) continue;
        if (ci.extendable && r + 1 != rho) continue;
        const bool y_interval_chain = interval(p, base, y).is_chain;
        for (unsigned i = 1; i <= r; ++i) {
          if (!p.less(x[i], y)) continue;
          if (i < r ? p.leq(x[i + 1], y) : y_interval_chain) continue;
          bool found = false;
          for (Elem yp : p.lower_covers(y)) {
            if (p.less(x[i - 1], yp) && !p.leq(x[i], yp)) {
              found = true;
              break;
            }
          }
          if (!found) return {ParallelogramWitness{base, x, y, i}};
        }
      }
    }
  }
  return {};
}

bool is_atomic(const RankedPoset& p) {
  for (Elem x = 0; x < p.size(); ++x) {
    if (x == p.bottom()) continue;
    std::vector<Elem> atoms;
    for (Elem a : p.atoms()) {
      if (p.leq(a, x)) atoms.push_back(a);
    }
    auto j = p.join(atoms);
    if (!j || *j != x) return false;
  }
  return true;
}

Verdict<GeometricWitness> check_geometric(const RankedPoset& p) {
  for (Elem x = 0; x < p.size(); ++x) {
    if (x == p.bottom()) continue;
    std::vector<Elem> atoms;
    for (Elem a : p.atoms()) {
      if (p.leq(a, x)) atoms.push_back(a);
    }
    auto j = p.join(atoms);
    if (!j || *j != x) return {GeometricWitness{GeometricWitness::Kind::NotAtomic, x, x}};
  }
  for (Elem x = 0; x < p.size(); ++x) {
    for (Elem y = x + 1; y < p.size(); ++y) {
      std::vector<Elem> pair{x, y};
      auto j = p.join(pair);
      if (!j) continue;
      if (p.rank(p.meet(x, y)) + p.rank(*j) > p.rank(x) + p.rank(y)) {
        return {GeometricWitness{GeometricWitness::Kind::RankInequality, x, y}};
      }
    }
  }
  return {};
}

Verdict<MinAtomWitness> check_min_atom_rank(const RankedPoset& p) {
  if (!is_atomic(p)) throw PreconditionError("check_min_atom_rank needs an atomic semi-lattice");
  for (Elem l = 0; l < p.size(); ++l) {
    if (l == p.bottom()) continue;
    std::vector<Elem> below;
    for (Elem a : p.atoms()) {
      if (p.leq(a, l)) below.push_back(a);
    }
    if (below.size() > 24) {
      throw PreconditionError("check_min_atom_rank: element '" + p.id(l) + "' has more than 24 atoms below it");
    }
    const std::size_t m = below.size();
    // Subsets by size, then lexicographically, so the reported set is the
    // smallest offender.
    for (std::size_t size = 1; size <= m; ++size) {
      std::vector<bool> pick(m, false);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
      do {
        std::vector<Elem> s;
        for (std::size_t i = 0; i < m; ++i) {
          if (pick[i]) s.push_back(below[i]);
        }
        auto j = p.join(s);
        if (!j || *j != l) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
          std::vector<Elem> t = s;
          t.erase(t.begin() + static_cast<long>(drop));
          auto jt = p.join(t);
          if (jt && *jt == l) minimal = false;
        }
        if (minimal && s.size() != p.rank(l)) return {MinAtomWitness{l, s}};
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return {};
}

bool ShadowReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ShadowRow& r) { return r.bound <= r.actual; });
}

ShadowReport verify_shadow_theorem(const RankedPoset& p, BoundKind kind) {
  if (kind == BoundKind::KruskalKatona) {
    if (!check_diamond(p).pass()) throw PreconditionError("the poset does not have the diamond property");
  } else if (!check_parallelogram(p).pass()) {
    throw PreconditionError("the poset does not have the parallelogram property");
  }
  ShadowReport report{kind, {}};
  auto f = f_vector(p);
  for (int k = 0; k <= f.top_index(); ++k) {
    auto fk = f.at(k);
    report.rows.push_back({k, fk, shadow_bound(kind, fk, static_cast<unsigned>(k)),
                           shadow(p, static_cast<unsigned>(k)).size()});
  }
  return report;
}

Verdict<ShiftedWitness> check_shifted(const FaceSet& family) {
  for (const auto& s : family) {
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      for (unsigned i = 1; i < s[pos]; ++i) {
        if (std::binary_search(s.begin(), s.end(), i)) continue;
        Face t = s;
        t.erase(t.begin() + static_cast<long>(pos));
        t.insert(std::lower_bound(t.begin(), t.end(), i), i);
        if (!family.count(t)) return {ShiftedWitness{s, t}};
      }
    }
  }
  return {};
}

Verdict<ShiftedWitness> check_complex(const FaceSet& family) {
  if (!family.empty() && !family.count(Face{})) return {ShiftedWitness{*family.begin(), Face{}}};
  for (const auto& s : family) {
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      Face t = s;
      t.erase(t.begin() + static_cast<long>(pos));
      if (!family.count(t)) return {ShiftedWitness{s, t}};
    }
  }
  return {};
}

Verdict<OrderIdealWitness> check_order_ideal(const MonomialSet& monomials) {
  for (const auto& m : monomials) {
    for (std::size_t var : m.support()) {
      auto d = m.divided(var);
      if (!monomials.count(d)) return {OrderIdealWitness{m, d}};
    }
  }
  return {};
}

}  // namespace mslat
