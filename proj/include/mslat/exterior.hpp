#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mslat/face.hpp"
#include "mslat/fvector.hpp"
#include "mslat/poset.hpp"

namespace mslat {

/// The exterior face ring of a geometric meet semi-lattice: the exterior
/// algebra on the atoms modulo products whose atoms have no join, or a join
/// of the wrong rank, with products of equal join and size identified.
/// Atoms are labelled 1..n in element index order.
class ExteriorFaceRing {
 public:
  /// Throws PreconditionError unless check_geometric passes.
  explicit ExteriorFaceRing(const RankedPoset& lattice);

  const RankedPoset& lattice() const { return lattice_; }
  std::size_t atom_count() const { return atoms_.size(); }
  /// Element carrying label `label` (1-based).
  Elem atom(unsigned label) const { return atoms_.at(label - 1); }
  unsigned label(Elem atom) const;

  /// Class of e_T: the join of T, or nullopt (zero) when that join is the
  /// adjoined top or has rank other than |T|.
  std::optional<Elem> project(const Face& t) const;

  /// Number of distinct nonzero classes e_T with |T| = k, for every k.
  /// Throws InvariantError if this differs from the f-vector.
  FVector graded_dimensions() const;

 private:
  RankedPoset lattice_;
  std::vector<Elem> atoms_;
};

inline std::optional<Elem> project_subset(const ExteriorFaceRing& ring, const Face& t) { return ring.project(t); }

struct ShiftOptions {
  std::uint64_t seed = 1;
  /// When set, the shift is recomputed with this seed and any difference
  /// throws GenericityError.
  std::optional<std::uint64_t> seed2;
};

/// Greedy lexicographic basis of wedge products of a generic basis, taken
/// degree by degree. Throws InvariantError if the result has the wrong
/// f-vector or is not a complex, GenericityError if it is not shifted or the
/// two seeds disagree.
FaceSet shift_exterior(const ExteriorFaceRing& ring, const ShiftOptions& opt);
FaceSet shift_exterior(const RankedPoset& lattice, const ShiftOptions& opt);

/// For each x the lexicographically least set of r(x) atoms whose join is x,
/// with atoms compared by their position in `order` (a permutation of the
/// atoms; empty means index order). Faces are reported with the fixed labels
/// 1..n. Throws PreconditionError unless the lattice is geometric and
/// InvariantError if the result is not a complex with the lattice's f-vector.
FaceSet bjorner_delta(const RankedPoset& lattice, const std::vector<Elem>& order);

/// The f-vector (1, f_0, f_1, ...) of a face family.
FVector face_f_vector(const FaceSet& faces);

}  // namespace mslat
