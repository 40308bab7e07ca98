#pragma once

#include <optional>
#include <vector>

#include "mslat/bounds.hpp"
#include "mslat/face.hpp"
#include "mslat/monomial.hpp"
#include "mslat/poset.hpp"

namespace mslat {

template <class Witness>
struct Verdict {
  std::optional<Witness> witness;
  bool pass() const { return !witness.has_value(); }
};

/// x < y, two ranks apart, with fewer than two elements strictly between.
struct DiamondWitness {
  Elem x;
  Elem y;
};

/// x covers base, y sits above base, and every lower cover of y inside
/// P(base) lies above x.
struct StarWitness {
  Elem base;
  Elem cover;
  Elem y;
};

/// chain is base = x_0 < x_1 < ... < x_r; no y' < y has x_{i-1} < y' and
/// x_i not below y'.
struct ParallelogramWitness {
  Elem base;
  std::vector<Elem> chain;
  Elem y;
  unsigned i;
};

struct GeometricWitness {
  enum class Kind { NotAtomic, RankInequality };
  Kind kind;
  Elem x;
  Elem y;  // equals x for NotAtomic
};

/// S is an inclusion-minimal set of atoms with join l and |S| != r(l).
struct MinAtomWitness {
  Elem l;
  std::vector<Elem> atoms;
};

Verdict<DiamondWitness> check_diamond(const RankedPoset& p);
Verdict<StarWitness> check_condition_star(const RankedPoset& p);

/// Condition (**) with the rank of y read relative to the base: for every
/// base, every chain-interval [base, x_r] with 0 < r < rank(y) - rank(base)
/// that cannot be extended without reaching that rank, every y above base
/// and every admissible i.
Verdict<ParallelogramWitness> check_parallelogram(const RankedPoset& p);

bool is_atomic(const RankedPoset& p);
Verdict<GeometricWitness> check_geometric(const RankedPoset& p);

/// Throws PreconditionError when p is not atomic, or when some element has
/// more than 24 atoms below it.
Verdict<MinAtomWitness> check_min_atom_rank(const RankedPoset& p);

struct ShadowRow {
  int k;
  std::uint64_t f_k;
  Natural bound;
  std::uint64_t actual;  // |shadow of the rank-(k+1) level|
  Natural margin() const { return Natural(actual) - bound; }
};

struct ShadowReport {
  BoundKind kind;
  std::vector<ShadowRow> rows;
  bool pass() const;
};

/// Compares each bound against the real shadow. The hypothesis (diamond for
/// KruskalKatona, parallelogram for Macaulay) is checked first and a failure
/// throws PreconditionError.
ShadowReport verify_shadow_theorem(const RankedPoset& p, BoundKind kind);

struct ShiftedWitness {
  Face s;
  Face t;  // obtained from s by lowering one entry; missing from the family
};

Verdict<ShiftedWitness> check_shifted(const FaceSet& family);

/// m and a divisor m / x_j that is missing.
struct OrderIdealWitness {
  Monomial m;
  Monomial divisor;
};

Verdict<OrderIdealWitness> check_order_ideal(const MonomialSet& monomials);

/// Faces missing one of their subsets: (face, missing subset).
Verdict<ShiftedWitness> check_complex(const FaceSet& family);

}  // namespace mslat
