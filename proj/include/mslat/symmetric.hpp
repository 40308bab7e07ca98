#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mslat/exterior.hpp"
#include "mslat/monomial.hpp"
#include "mslat/poset.hpp"
#include "mslat/poset_json.hpp"

namespace mslat {

struct ExtensionStep {
  Monomial m;
  std::size_t var;  // x_var * m is the new element
};

/// A generalized multicomplex: a ranked meet semi-lattice whose elements
/// carry monomial labels, grown from a geometric seed by extension steps.
/// Variables x_1..x_n are the seed's atoms in index order.
class PPoset {
 public:
  const RankedPoset& poset() const { return poset_; }
  /// The seed: the elements with squarefree labels.
  const RankedPoset& origin() const { return origin_; }
  const std::vector<ExtensionStep>& log() const { return log_; }
  std::size_t variables() const { return vars_; }

  const Monomial& label(Elem e) const { return labels_.at(e); }
  std::optional<Elem> find(const Monomial& m) const;
  /// Throws mslat::Error if no element carries `m`.
  Elem element_of(const Monomial& m) const;
  /// The element labelled x_var^power (the bottom for power 0), if present.
  std::optional<Elem> pure_power(std::size_t var, unsigned power) const;

 private:
  friend PPoset replay(const RankedPoset&, const std::vector<ExtensionStep>&);
  PPoset(RankedPoset poset, RankedPoset origin) : poset_(std::move(poset)), origin_(std::move(origin)) {}

  RankedPoset poset_;
  RankedPoset origin_;
  std::vector<Monomial> labels_;
  std::vector<ExtensionStep> log_;
  std::size_t vars_ = 0;
};

/// Labels every l with the product of the atoms below it (l itself included
/// when it is an atom). Throws PreconditionError unless L is geometric.
PPoset seed_from_geometric(const RankedPoset& lattice);

/// Adds x_var * label(m), covering every (x_var / x_b) label(m) with x_b
/// dividing label(m). Throws PreconditionError naming the failed condition:
/// x_var must divide label(m), every (x_var / x_b) label(m) must be present,
/// x_var * label(m) must be absent. Throws InvariantError if the result is not
/// a ranked meet semi-lattice with the parallelogram property.
PPoset extend(const PPoset& p, Elem m, std::size_t var);

/// The multicomplex as a PPoset: its squarefree part is the seed, and every
/// other monomial is added by an extension step in degree order.
PPoset pposet_from_multicomplex(const MonomialSet& monomials);

/// r_j: the largest exponent of x_j among the labels.
std::vector<unsigned> variable_caps(const PPoset& p);

/// Class of x^a: nullopt (zero) if some a_j exceeds its cap, the pure powers
/// have no join, or the join's rank differs from the degree; else the join.
std::optional<Elem> project_monomial(const PPoset& p, const std::vector<unsigned>& a);

/// Greedy <_L basis of products of a generic basis of linear forms, degree
/// by degree. Throws InvariantError if the result is not an order ideal with
/// the f-vector of P, GenericityError if the two seeds disagree.
MonomialSet shift_symmetric(const PPoset& p, const ShiftOptions& opt);

/// P restricted to ranks <= r.
PPoset truncate(const PPoset& p, unsigned r);

/// Poset format plus "labels": {id: [exponents]} and
/// "log": [{"m": "x1^2", "var": 1}, ...] with m written as a monomial.
Json pposet_to_json(const PPoset& p);
/// Replays the document: the squarefree-labelled elements form the seed, the
/// rest are re-added by extension steps (from "log" if present, else in rank
/// order), and the result must match the document exactly.
PPoset pposet_from_json(const Json& doc);

/// Degree counts (1, f_0, f_1, ...) of an order ideal of monomials.
FVector monomial_f_vector(const MonomialSet& monomials);

}  // namespace mslat
