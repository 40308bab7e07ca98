#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mslat/poset.hpp"
#include "mslat/poset_json.hpp"

namespace mslat {

/// Embedded example structures:
///   square            the square 1234 as a regular CW complex, f = (1,4,4,1)
///   square-lprime     L' of the square with multichains of rank <= r(l)
///   c4                the 4-cycle as a simplicial complex, f = (1,4,4)
///   triangle          boundary of a triangle, f = (1,3,3)
///   triangle-complex  the full 2-simplex, f = (1,3,3,1)
///   3lines            three lines in general position in the plane
///   pencil            three concurrent lines
///   tree              L(T) for the full binary tree of depth 2
///   multicomplex-1221 the multicomplex {1, x1, x2, x1^2, x1x2, x1^3} (a PPoset)
///   pencil-extended   seed of the pencil grown by two extension steps (a PPoset)
std::vector<std::string> fixture_names();

/// The emitted document: the poset format, or the PPoset format for the two
/// PPoset fixtures. Throws mslat::Error for an unknown name.
Json fixture_json(std::string_view name);

/// The underlying poset of any fixture.
RankedPoset fixture_poset(std::string_view name);

struct FixtureClaim {
  std::string fixture;
  std::string claim;
  bool ok = false;
  std::string detail;
};

/// Recomputes every documented number about the fixtures.
std::vector<FixtureClaim> verify_fixtures();

}  // namespace mslat
