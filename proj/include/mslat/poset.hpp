#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mslat/fvector.hpp"

namespace mslat {

/// Index of an element inside a RankedPoset. Indices follow the natural
/// order of the element identifiers, so iterating 0..size()-1 is the
/// deterministic "sorted identifier" order used for counterexamples.
using Elem = std::size_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Identifier order that compares embedded digit runs numerically
/// ("x2" < "x10"), falling back to plain byte order on ties.
bool natural_less(std::string_view a, std::string_view b);

struct ElementDecl {
  std::string id;
  long long rank = 0;
};

struct CoverDecl {
  std::string lower;
  std::string upper;
};

/// A finite ranked meet semi-lattice. Immutable once built; every query is a
/// pure function of the stored order, so instances may be shared freely
/// between threads.
class RankedPoset {
 public:
  /// Validates and builds. Throws PosetError naming the witnessing elements
  /// on any violation: duplicate ids, unknown cover endpoints, a missing or
  /// repeated rank-0 element, covers that do not step the rank by one,
  /// non-bottom elements with nothing below them, and pairs without a meet.
  static RankedPoset build(std::vector<ElementDecl> elements, std::vector<CoverDecl> covers);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(Elem e) const { return ids_.at(e); }
  std::optional<Elem> find(std::string_view id) const;
  /// Like find() but throws PosetError(UnknownId).
  Elem at(std::string_view id) const;

  unsigned rank(Elem e) const { return ranks_.at(e); }
  unsigned max_rank() const noexcept { return static_cast<unsigned>(levels_.size()) - 1; }
  Elem bottom() const noexcept { return bottom_; }

  std::span<const Elem> lower_covers(Elem e) const { return lower_.at(e); }
  std::span<const Elem> upper_covers(Elem e) const { return upper_.at(e); }
  std::span<const Elem> rank_level(unsigned r) const;
  std::span<const Elem> atoms() const { return rank_level(1); }

  bool leq(Elem x, Elem y) const { return up_[x].test(y); }
  bool less(Elem x, Elem y) const { return x != y && up_[x].test(y); }
  bool covers(Elem lower, Elem upper) const;

  /// {z : z <= e} and {z : e <= z} as bitsets over element indices.
  const Bitset& below(Elem e) const { return down_.at(e); }
  const Bitset& above(Elem e) const { return up_.at(e); }

  Elem meet(Elem x, Elem y) const;
  /// Join in the lattice obtained by adjoining a top. std::nullopt stands for
  /// that adjoined top: the elements have no common upper bound in the poset.
  /// The join of an empty set is the bottom.
  std::optional<Elem> join(std::span<const Elem> elems) const;

  /// Induced poset on `keep`, with ranks lowered by `rank_shift`. Used for
  /// up-sets and rank truncations, both of which keep covers as covers.
  RankedPoset induced(const Bitset& keep, unsigned rank_shift = 0) const;

  std::vector<ElementDecl> element_decls() const;
  std::vector<CoverDecl> cover_decls() const;

 private:
  RankedPoset() = default;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<unsigned> ranks_;
  std::vector<std::vector<Elem>> lower_;
  std::vector<std::vector<Elem>> upper_;
  std::vector<std::vector<Elem>> levels_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  Elem bottom_ = 0;
};

FVector f_vector(const RankedPoset& p);

/// P(x) = {y : x <= y}, re-ranked so that x is the new bottom.
RankedPoset up_set(const RankedPoset& p, Elem x);

/// Elements covered by some element of rank k+1, in index order.
std::vector<Elem> shadow(const RankedPoset& p, unsigned k);

struct Interval {
  std::vector<Elem> elements;
  bool is_chain = false;
};

/// Closed interval [x, y]. Throws PreconditionError unless x <= y.
Interval interval(const RankedPoset& p, Elem x, Elem y);

/// True when `map` (indexed by elements of `a`) is a bijection onto `b` that
/// preserves ranks and the order in both directions.
bool is_rank_isomorphism(const RankedPoset& a, const RankedPoset& b, std::span<const Elem> map);

}  // namespace mslat
