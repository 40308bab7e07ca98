#include "mslat/poset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "mslat/error.hpp"

namespace mslat {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t i_end = i, j_end = j;
      while (i_end < a.size() && is_digit(a[i_end])) ++i_end;
      while (j_end < b.size() && is_digit(b[j_end])) ++j_end;
      std::size_t i_nz = i, j_nz = j;
      while (i_nz + 1 < i_end && a[i_nz] == '0') ++i_nz;
      while (j_nz + 1 < j_end && b[j_nz] == '0') ++j_nz;
      auto da = a.substr(i_nz, i_end - i_nz);
      auto db = b.substr(j_nz, j_end - j_nz);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = i_end;
      j = j_end;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

RankedPoset RankedPoset::build(std::vector<ElementDecl> elements, std::vector<CoverDecl> covers) {
  using K = PosetError::Kind;
  std::sort(elements.begin(), elements.end(),
            [](const ElementDecl& x, const ElementDecl& y) { return natural_less(x.id, y.id); });

  RankedPoset p;
  const std::size_t n = elements.size();
  p.ids_.reserve(n);
  p.ranks_.reserve(n);
  for (const auto& e : elements) {
    if (e.rank < 0) {
      throw PosetError(K::NegativeRank, "element '" + e.id + "' has negative rank", {e.id});
    }
    if (!p.index_.emplace(e.id, p.ids_.size()).second) {
      throw PosetError(K::DuplicateId, "duplicate element id '" + e.id + "'", {e.id});
    }
    p.ids_.push_back(e.id);
    p.ranks_.push_back(static_cast<unsigned>(e.rank));
  }

  std::vector<Elem> rank_zero;
  for (Elem e = 0; e < n; ++e) {
    if (p.ranks_[e] == 0) rank_zero.push_back(e);
  }
  if (rank_zero.empty()) {
    throw PosetError(K::MissingBottom, "no element of rank 0");
  }
  if (rank_zero.size() > 1) {
    std::vector<std::string> w;
    for (auto e : rank_zero) w.push_back(p.ids_[e]);
    throw PosetError(K::DuplicateBottom, "more than one element of rank 0", w);
  }
  p.bottom_ = rank_zero.front();

  p.lower_.assign(n, {});
  p.upper_.assign(n, {});
  std::set<std::pair<Elem, Elem>> seen;
  for (const auto& c : covers) {
    auto lo = p.find(c.lower);
    auto hi = p.find(c.upper);
    if (!lo || !hi) {
      const auto& missing = !lo ? c.lower : c.upper;
      throw PosetError(K::UnknownId, "cover refers to unknown element '" + missing + "'", {missing});
    }
    if (p.ranks_[*hi] != p.ranks_[*lo] + 1) {
      throw PosetError(K::RankStep,
                       "cover (" + c.lower + ", " + c.upper + ") does not raise the rank by one",
                       {c.lower, c.upper});
    }
    if (seen.emplace(*lo, *hi).second) {
      p.lower_[*hi].push_back(*lo);
      p.upper_[*lo].push_back(*hi);
    }
  }
  for (Elem e = 0; e < n; ++e) {
    std::sort(p.lower_[e].begin(), p.lower_[e].end());
    std::sort(p.upper_[e].begin(), p.upper_[e].end());
    if (e != p.bottom_ && p.lower_[e].empty()) {
      throw PosetError(K::NoLowerCover, "element '" + p.ids_[e] + "' covers nothing", {p.ids_[e]});
    }
  }

  unsigned top_rank = *std::max_element(p.ranks_.begin(), p.ranks_.end());
  p.levels_.assign(top_rank + 1, {});
  for (Elem e = 0; e < n; ++e) p.levels_[p.ranks_[e]].push_back(e);

  // Ranks strictly increase along covers, so a rank-ordered sweep sees every
  // lower cover before the element itself.
  p.down_.assign(n, Bitset(n));
  for (const auto& level : p.levels_) {
    for (Elem e : level) {
      p.down_[e].set(e);
      for (Elem l : p.lower_[e]) p.down_[e] |= p.down_[l];
    }
  }
  p.up_.assign(n, Bitset(n));
  for (Elem y = 0; y < n; ++y) {
    for (auto x = p.down_[y].find_first(); x != Bitset::npos; x = p.down_[y].find_next(x)) {
      p.up_[x].set(y);
    }
  }

  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (p.leq(x, y) || p.leq(y, x)) continue;
      Bitset common = p.down_[x] & p.down_[y];
      Elem best = p.bottom_;
      for (auto c = common.find_first(); c != Bitset::npos; c = common.find_next(c)) {
        if (p.ranks_[c] > p.ranks_[best]) best = c;
      }
      if (common.is_subset_of(p.down_[best])) continue;
      std::vector<std::string> w{p.ids_[x], p.ids_[y]};
      for (auto c = common.find_first(); c != Bitset::npos; c = common.find_next(c)) {
        if ((p.up_[c] & common).count() == 1) w.push_back(p.ids_[c]);
      }
      throw PosetError(K::MeetFailure,
                       "elements '" + p.ids_[x] + "' and '" + p.ids_[y] +
                           "' have more than one maximal common lower bound",
                       w);
    }
  }
  return p;
}

std::optional<Elem> RankedPoset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem RankedPoset::at(std::string_view id) const {
  if (auto e = find(id)) return *e;
  throw PosetError(PosetError::Kind::UnknownId, "unknown element '" + std::string(id) + "'",
                   {std::string(id)});
}

std::span<const Elem> RankedPoset::rank_level(unsigned r) const {
  if (r >= levels_.size()) return {};
  return levels_[r];
}

bool RankedPoset::covers(Elem lower, Elem upper) const {
  const auto& lc = lower_.at(upper);
  return std::binary_search(lc.begin(), lc.end(), lower);
}

Elem RankedPoset::meet(Elem x, Elem y) const {
  if (leq(x, y)) return x;
  if (leq(y, x)) return y;
  Bitset common = down_[x] & down_[y];
  Elem best = bottom_;
  for (auto c = common.find_first(); c != Bitset::npos; c = common.find_next(c)) {
    if (ranks_[c] > ranks_[best]) best = c;
  }
  return best;
}

std::optional<Elem> RankedPoset::join(std::span<const Elem> elems) const {
  if (elems.empty()) return bottom_;
  Bitset common = up_.at(elems.front());
  for (auto e : elems.subspan(1)) common &= up_.at(e);
  if (common.none()) return std::nullopt;
  Elem best = common.find_first();
  for (auto c = common.find_next(best); c != Bitset::npos; c = common.find_next(c)) {
    if (ranks_[c] < ranks_[best]) best = c;
  }
  if (!common.is_subset_of(up_[best])) {
    throw InvariantError("join is not unique; the poset is not a meet semi-lattice");
  }
  return best;
}

RankedPoset RankedPoset::induced(const Bitset& keep, unsigned rank_shift) const {
  std::vector<ElementDecl> elems;
  std::vector<CoverDecl> cov;
  for (auto e = keep.find_first(); e != Bitset::npos; e = keep.find_next(e)) {
    elems.push_back({ids_[e], static_cast<long long>(ranks_[e]) - rank_shift});
    for (Elem u : upper_[e]) {
      if (keep.test(u)) cov.push_back({ids_[e], ids_[u]});
    }
  }
  return build(std::move(elems), std::move(cov));
}

std::vector<ElementDecl> RankedPoset::element_decls() const {
  std::vector<ElementDecl> out;
  out.reserve(size());
  for (Elem e = 0; e < size(); ++e) out.push_back({ids_[e], ranks_[e]});
  return out;
}

std::vector<CoverDecl> RankedPoset::cover_decls() const {
  std::vector<CoverDecl> out;
  for (Elem e = 0; e < size(); ++e) {
    for (Elem u : upper_[e]) out.push_back({ids_[e], ids_[u]});
  }
  return out;
}

FVector f_vector(const RankedPoset& p) {
  std::vector<std::uint64_t> entries;
  for (unsigned r = 0; r <= p.max_rank(); ++r) entries.push_back(p.rank_level(r).size());
  return FVector(std::move(entries));
}

RankedPoset up_set(const RankedPoset& p, Elem x) { return p.induced(p.above(x), p.rank(x)); }

std::vector<Elem> shadow(const RankedPoset& p, unsigned k) {
  Bitset hit(p.size());
  for (Elem y : p.rank_level(k + 1)) {
    for (Elem l : p.lower_covers(y)) hit.set(l);
  }
  std::vector<Elem> out;
  for (auto e = hit.find_first(); e != Bitset::npos; e = hit.find_next(e)) out.push_back(e);
  return out;
}

Interval interval(const RankedPoset& p, Elem x, Elem y) {
  if (!p.leq(x, y)) {
    throw PreconditionError("interval: '" + p.id(x) + "' is not below '" + p.id(y) + "'");
  }
  Bitset between = p.above(x) & p.below(y);
  Interval out;
  for (auto e = between.find_first(); e != Bitset::npos; e = between.find_next(e)) {
    out.elements.push_back(e);
  }
  // In a ranked poset an interval is a chain exactly when it has one element
  // per rank.
  out.is_chain = out.elements.size() == p.rank(y) - p.rank(x) + 1;
  return out;
}

bool is_rank_isomorphism(const RankedPoset& a, const RankedPoset& b, std::span<const Elem> map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Elem x = 0; x < a.size(); ++x) {
    Elem y = map[x];
    if (y >= b.size() || hit[y]) return false;
    hit[y] = true;
    if (a.rank(x) != b.rank(y)) return false;
  }
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem z = 0; z < a.size(); ++z) {
      if (a.leq(x, z) != b.leq(map[x], map[z])) return false;
    }
  }
  return true;
}

}  // namespace mslat
