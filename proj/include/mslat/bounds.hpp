#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mslat/fvector.hpp"

namespace mslat {

using Natural = boost::multiprecision::cpp_int;

/// C(top, bottom); zero when top < bottom, one when bottom == 0.
Natural binomial(const Natural& top, unsigned bottom);

struct CascadeTerm {
  Natural top;
  unsigned bottom = 0;
  friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

/// n = C(n_k, k) + C(n_{k-1}, k-1) + ... + C(n_i, i) with
/// n_k > n_{k-1} > ... > n_i >= i >= 1.
struct CascadeExpansion {
  unsigned k = 0;
  std::vector<CascadeTerm> terms;

  Natural value() const;
  std::string str() const;
};

/// Greedy expansion: each n_j is the largest integer with C(n_j, j) not
/// exceeding what is left. Requires n >= 1 and k >= 1.
CascadeExpansion cascade_expand(const Natural& n, unsigned k);

/// Lower bound on the number of (k-1)-sets covered by n k-sets:
/// sum of C(n_j, j-1) over the expansion of n. Zero for n == 0.
Natural kk_shadow_bound(const Natural& n, unsigned k);

/// Lower bound on the number of degree k-1 divisors of n degree-k monomials:
/// sum of C(n_j - 1, j - 1) over the expansion of n. Zero for n == 0.
Natural macaulay_shadow_bound(const Natural& n, unsigned k);

enum class BoundKind { KruskalKatona, Macaulay };

/// Bound for f_k of an f-vector: the expansion parameter is k+1, because
/// f_k counts objects of size or degree k+1.
Natural shadow_bound(BoundKind kind, const Natural& f_k, unsigned k);

struct BoundViolation {
  int k = 0;
  Natural bound;            // bound applied to f_k
  std::uint64_t available;  // f_{k-1}
};

struct InequalityVerdict {
  std::optional<BoundViolation> violation;
  bool pass() const { return !violation.has_value(); }
};

/// Least k with bound(f_k) > f_{k-1}, or pass.
InequalityVerdict check_bound(const FVector& f, BoundKind kind);
inline InequalityVerdict check_kk(const FVector& f) { return check_bound(f, BoundKind::KruskalKatona); }
inline InequalityVerdict check_macaulay(const FVector& f) { return check_bound(f, BoundKind::Macaulay); }

/// Evaluates both sides of the Bjorner-Vrecica inequality for the Macaulay
/// boundary function. Without `with_one`:
///   d^k(sum n_i) <= sum_{0<=i<=r} max{n_{i+1}, d^{k-i}(n_i)},  r = |n| - 1 < k,
/// with `with_one` (|n| must be k+1):
///   d^k(1 + sum n_i) <= 1 + sum_{0<=i<k} max{n_{i+1}, d^{k-i}(n_i)}.
/// Here d^j(m) is macaulay_shadow_bound(m, j+1) and n_{r+1} is taken as 0.
/// Throws PreconditionError on an arity mismatch.
bool bv_inequality_holds(std::span<const std::uint64_t> n_list, unsigned k, bool with_one);

enum class ShadowMode { Sets, Monomials };
enum class SearchStrategy { Auto, Exhaustive, Compressed };

/// Exact minimum shadow size over all families of n k-subsets of a
/// `universe`-element ground set (Sets) or n degree-k monomials in
/// `universe` variables (Monomials; the shadow is the set of degree k-1
/// divisors).
///
/// Exhaustive is a branch-and-bound over all n-element families. Compressed
/// only visits families closed under the shifting moves (replace an element
/// or variable by a smaller one), which never enlarge a shadow, so it returns
/// the same minimum. Auto picks Exhaustive while C(#objects, n) <= 1e7.
/// Throws PreconditionError when fewer than n objects exist.
std::uint64_t brute_min_shadow(std::uint64_t n, unsigned k, ShadowMode mode, unsigned universe,
                               SearchStrategy strategy = SearchStrategy::Auto);

}  // namespace mslat
