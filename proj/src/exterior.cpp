#include "mslat/exterior.hpp"

#include <algorithm>
#include <map>

#include "mslat/error.hpp"
#include "mslat/field.hpp"
#include "mslat/generic_matrix.hpp"
#include "mslat/properties.hpp"

namespace mslat {

namespace {

// k-subsets of {1..n} in lex order.
std::vector<Face> subsets(unsigned n, unsigned k) {
  std::vector<Face> out;
  Face cur;
  auto rec = [&](auto&& self, unsigned from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (unsigned v = from; v + (k - cur.size()) <= n + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

ExteriorFaceRing::ExteriorFaceRing(const RankedPoset& lattice) : lattice_(lattice) {
  if (auto v = check_geometric(lattice); !v.pass()) {
    throw PreconditionError("the exterior face ring needs a geometric semi-lattice; '" + lattice.id(v.witness->x) +
                            "' fails");
  }
  auto a = lattice.atoms();
  atoms_.assign(a.begin(), a.end());
}

unsigned ExteriorFaceRing::label(Elem atom) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end()) throw PreconditionError("'" + lattice_.id(atom) + "' is not an atom");
  return static_cast<unsigned>(it - atoms_.begin()) + 1;
}

std::optional<Elem> ExteriorFaceRing::project(const Face& t) const {
  std::vector<Elem> elems;
  for (auto v : t) {
    if (v < 1 || v > atoms_.size()) throw PreconditionError("atom label " + std::to_string(v) + " out of range");
    elems.push_back(atoms_[v - 1]);
  }
  auto j = lattice_.join(elems);
  if (!j || lattice_.rank(*j) != t.size()) return std::nullopt;
  return j;
}

FVector ExteriorFaceRing::graded_dimensions() const {
  const unsigned n = static_cast<unsigned>(atoms_.size());
  std::vector<std::uint64_t> dims;
  for (unsigned k = 0; k <= lattice_.max_rank(); ++k) {
    std::vector<bool> hit(lattice_.size(), false);
    std::uint64_t count = 0;
    for (const auto& t : subsets(n, k)) {
      auto e = project(t);
      if (e && !hit[*e]) {
        hit[*e] = true;
        ++count;
      }
    }
    dims.push_back(count);
  }
  FVector out(std::move(dims));
  if (out != f_vector(lattice_)) {
    throw InvariantError("graded dimensions " + out.str() + " differ from the f-vector " + f_vector(lattice_).str());
  }
  return out;
}

FVector face_f_vector(const FaceSet& faces) {
  std::vector<std::uint64_t> counts;
  for (const auto& f : faces) {
    if (counts.size() <= f.size()) counts.resize(f.size() + 1, 0);
    ++counts[f.size()];
  }
  if (counts.empty()) counts.push_back(0);
  if (counts[0] != 1) throw InvariantError("a face family must contain the empty face exactly once");
  return FVector(std::move(counts));
}

namespace {

FaceSet shift_once(const ExteriorFaceRing& ring, std::uint64_t seed) {
  using F = GF2_64;
  const RankedPoset& p = ring.lattice();
  const unsigned n = static_cast<unsigned>(ring.atom_count());
  GenericMatrix<F> g(n, seed);
  FaceSet out{Face{}};
  for (unsigned k = 1; k <= p.max_rank(); ++k) {
    auto level = p.rank_level(k);
    std::map<Elem, std::size_t> column;
    for (Elem e : level) column.emplace(e, column.size());
    // Only T with a nonzero class contribute minors.
    std::vector<std::pair<Face, std::size_t>> surviving;
    for (const auto& t : subsets(n, k)) {
      if (auto e = ring.project(t)) surviving.emplace_back(t, column.at(*e));
    }
    IncrementalBasis<F> basis(level.size());
    for (const auto& s : subsets(n, k)) {
      if (basis.rank() == level.size()) break;
      std::vector<F::value_type> row(level.size(), F::zero());
      for (const auto& [t, col] : surviving) {
        std::vector<std::vector<F::value_type>> minor(k, std::vector<F::value_type>(k));
        for (unsigned i = 0; i < k; ++i) {
          for (unsigned j = 0; j < k; ++j) minor[i][j] = g.at(s[i] - 1, t[j] - 1);
        }
        row[col] = F::add(row[col], determinant<F>(std::move(minor)));
      }
      if (basis.add(std::move(row))) out.insert(s);
    }
  }
  return out;
}

}  // namespace

FaceSet shift_exterior(const ExteriorFaceRing& ring, const ShiftOptions& opt) {
  FaceSet out = shift_once(ring, opt.seed);
  const RankedPoset& p = ring.lattice();
  if (face_f_vector(out) != f_vector(p)) {
    throw InvariantError("shifted family has f-vector " + face_f_vector(out).str() + ", expected " +
                         f_vector(p).str());
  }
  if (auto v = check_complex(out); !v.pass()) {
    throw InvariantError("shifted family is not a complex: " + face_str(v.witness->s) + " lacks " +
                         face_str(v.witness->t));
  }
  if (auto v = check_shifted(out); !v.pass()) {
    throw GenericityError("shifted family is not shifted: " + face_str(v.witness->s) + " present, " +
                          face_str(v.witness->t) + " missing");
  }
  if (opt.seed2 && shift_once(ring, *opt.seed2) != out) {
    throw GenericityError("seeds " + std::to_string(opt.seed) + " and " + std::to_string(*opt.seed2) +
                          " give different shifts");
  }
  return out;
}

FaceSet shift_exterior(const RankedPoset& lattice, const ShiftOptions& opt) {
  return shift_exterior(ExteriorFaceRing(lattice), opt);
}

FaceSet bjorner_delta(const RankedPoset& lattice, const std::vector<Elem>& order) {
  ExteriorFaceRing ring(lattice);
  const std::size_t n = ring.atom_count();
  std::vector<Elem> seq = order;
  if (seq.empty()) {
    for (unsigned i = 1; i <= n; ++i) seq.push_back(ring.atom(i));
  }
  {
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    auto atoms = lattice.atoms();
    if (sorted.size() != n || !std::equal(sorted.begin(), sorted.end(), atoms.begin())) {
      throw PreconditionError("the ordering must list every atom exactly once");
    }
  }
  FaceSet out;
  for (Elem x = 0; x < lattice.size(); ++x) {
    const unsigned r = lattice.rank(x);
    // r-subsets of positions in lex order; the first one joining to x wins.
    std::vector<std::size_t> pos;
    std::optional<Face> found;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (pos.size() == r) {
        std::vector<Elem> elems;
        for (auto i : pos) elems.push_back(seq[i]);
        auto j = lattice.join(elems);
        if (!j || *j != x) return false;
        Face f;
        for (auto e : elems) f.push_back(ring.label(e));
        std::sort(f.begin(), f.end());
        found = f;
        return true;
      }
      for (std::size_t i = from; i + (r - pos.size()) <= n; ++i) {
        if (!lattice.leq(seq[i], x)) continue;
        pos.push_back(i);
        if (self(self, i + 1)) return true;
        pos.pop_back();
      }
      return false;
    };
    if (!rec(rec, 0)) throw InvariantError("no " + std::to_string(r) + " atoms join to '" + lattice.id(x) + "'");
    out.insert(*found);
  }
  if (face_f_vector(out) != f_vector(lattice)) {
    throw InvariantError("Bjorner's complex has f-vector " + face_f_vector(out).str());
  }
  if (auto v = check_complex(out); !v.pass()) {
    throw InvariantError("Bjorner's family is not a complex: " + face_str(v.witness->s) + " lacks " +
                         face_str(v.witness->t));
  }
  return out;
}

}  // namespace mslat
