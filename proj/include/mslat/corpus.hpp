#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mslat/monomial.hpp"
#include "mslat/poset.hpp"

namespace mslat {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [0, n) by plain reduction. Used instead of the
/// standard distributions so a seed gives the same corpus on every standard
/// library.
inline std::uint64_t draw(Rng& rng, std::uint64_t n) { return n <= 1 ? 0 : rng() % n; }

struct LayeredOptions {
  std::size_t max_elements = 12;
  /// Each element of rank >= 2 picks at least this many lower covers when the
  /// level below allows it. 1 gives unbiased shapes, 2 favours diamonds.
  std::size_t min_lower_covers = 1;
  std::size_t max_lower_covers = 3;
};

/// One random layered DAG with a unique bottom, ids "v0", "v1", ... . Returns
/// nullopt when the candidate is not a ranked meet semi-lattice.
std::optional<RankedPoset> random_layered(Rng& rng, const LayeredOptions& opt);

/// `count` valid posets from successive candidates of one seeded stream.
std::vector<RankedPoset> random_corpus(std::uint64_t seed, std::size_t count, const LayeredOptions& opt);

/// Like random_corpus but keeps only posets with the diamond property, and
/// only a quarter of the candidates of rank at most 1.
std::vector<RankedPoset> diamond_corpus(std::uint64_t seed, std::size_t count, std::size_t max_elements);

/// Flats of `atoms` random nonzero vectors in GF(q)^dim (q prime), restricted
/// to a random down-set. Atom ids are "1".."n", other flats are named by
/// their atoms ("1-3-4"), the bottom is "0".
RankedPoset random_geometric(Rng& rng, unsigned max_atoms);

/// Down-closure of a few random monomials in at most `max_vars` variables,
/// with at most `max_monomials` elements.
MonomialSet random_order_ideal(Rng& rng, unsigned max_vars, std::size_t max_monomials);

}  // namespace mslat
