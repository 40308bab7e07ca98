#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mslat/monomial.hpp"
#include "mslat/poset.hpp"
#include "mslat/poset_json.hpp"
#include "mslat/properties.hpp"

namespace mslat {

/// a_m <= ... <= a_1 <= a_0 in a carrier poset, stored largest first
/// (items()[0] is a_0). No item is the carrier's bottom.
class Multichain {
 public:
  Multichain() = default;
  /// Throws PreconditionError if an item is the bottom, out of range, or the
  /// items are not weakly decreasing in the carrier order.
  Multichain(const RankedPoset& carrier, std::vector<Elem> largest_first);

  const RankedPoset* carrier() const { return carrier_; }
  const std::vector<Elem>& items() const { return items_; }
  std::size_t length() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  /// Sum of the carrier ranks of the items.
  unsigned rank() const;
  /// Ids in ascending order inside parentheses: "(1,1,14)", "()" when empty.
  std::string str() const;

  friend bool operator==(const Multichain& a, const Multichain& b) { return a.items_ == b.items_; }
  friend bool operator<(const Multichain& a, const Multichain& b) {
    if (a.items_.size() != b.items_.size()) return a.items_.size() < b.items_.size();
    return a.items_ < b.items_;
  }

 private:
  const RankedPoset* carrier_ = nullptr;
  std::vector<Elem> items_;
};

/// a <=' b: |a| <= |b| and a_i <= b_i for every index of a, counted from the
/// top. Throws PreconditionError when the carriers differ.
bool multichain_leq(const Multichain& a, const Multichain& b);

using Family = std::map<Elem, std::set<Multichain>>;

struct RankBounded {};  // all multichains in (0,l] of rank at most r(l)
struct Chains {};       // chains without repetition in (0,l], closed under <='
struct Identity {};     // singletons (l') with 0 < l' <= l, plus the empty chain
struct Explicit {
  std::map<Elem, std::vector<Multichain>> generators;  // closed under <=' per l
};
using FamilySpec = std::variant<RankBounded, Chains, Identity, Explicit>;

/// F(l) for every non-bottom l.
Family enumerate_family(const RankedPoset& carrier, const FamilySpec& spec);

/// Least <='-downward closed set containing the generators (always holds the
/// empty multichain).
std::set<Multichain> closure(const RankedPoset& carrier, const std::vector<Multichain>& generators);

struct FamilyWitness {
  enum class Kind { OutsideInterval, NotClosed };
  Kind kind;
  Elem l;
  Multichain missing;  // NotClosed: below `present` but absent; OutsideInterval: the offender
  Multichain present;
};

Verdict<FamilyWitness> validate_family(const RankedPoset& carrier, const Family& family);

struct LPrime {
  std::shared_ptr<const RankedPoset> carrier;
  RankedPoset poset;
  std::vector<Multichain> chains;  // indexed by elements of `poset`
};

/// Builds L' over `carrier` (copied into the result). Throws PreconditionError
/// for a family that fails validate_family and InvariantError when the
/// derived covers or the componentwise meets disagree with the order.
LPrime build_lprime(const RankedPoset& carrier, const FamilySpec& spec);
LPrime build_lprime(std::shared_ptr<const RankedPoset> carrier, const Family& family);

/// Parses {"<carrier id>": [["1","14"], ...], ...}: multichains written
/// bottom-up as arrays of ids.
Explicit parse_explicit_family(const RankedPoset& carrier, const Json& doc);

/// (a_i ^ b_i) over the shared indices, with bottom entries dropped.
Multichain componentwise_meet(const Multichain& a, const Multichain& b);

/// For a chain-interval [lo, hi] of length >= 2 in L', the atom u with every
/// step adding u at the lower end, or nullopt if the steps are not of that
/// form. Throws PreconditionError if [lo, hi] is not a chain.
std::optional<Elem> lower_end_atom(const LPrime& lp, Elem lo, Elem hi);

/// Some chain-interval of length >= 2 whose steps do not all add the same
/// atom at the lower end.
struct ChainIntervalWitness {
  Elem lo;
  Elem hi;
};
Verdict<ChainIntervalWitness> check_chain_interval_types(const LPrime& lp);

/// Divisibility order on an order ideal of monomials; ids are Monomial::str().
RankedPoset divisibility_poset(const MonomialSet& monomials);

/// Repeatedly divides by the largest squarefree divisor; returns the
/// supports in the order they were removed (largest first).
std::vector<std::vector<std::size_t>> support_chain(const Monomial& m);

/// The face poset of the supports (ids like "{1,2,4}") is lprime.carrier.
struct MulticomplexEncoding {
  Family family;  // F(sigma) = closure of f(m) over supp(m) = sigma
  LPrime lprime;
  RankedPoset monomials;        // divisibility_poset of the input
  std::vector<Elem> bijection;  // element of `monomials` -> element of lprime.poset
};

/// Throws PreconditionError if the input is not an order ideal and
/// InvariantError if the resulting L' is not rank-isomorphic to it.
MulticomplexEncoding encode_multicomplex(const MonomialSet& monomials);

/// {"root": id, "edges": [[parent, child], ...]}: leaves become atoms, the
/// root the top, and a new bottom ("0", or "_0" if "0" is taken) is added.
/// Throws PreconditionError for a non-tree or leaves at different depths.
RankedPoset tree_lattice(const Json& tree);

}  // namespace mslat
