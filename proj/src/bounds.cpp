#include "mslat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mslat/error.hpp"

namespace mslat {

namespace {

using u128 = unsigned __int128;
constexpr u128 kSaturated = u128(1) << 64;

// C(m, j) clamped to 2^64. Multiplying up from the smaller side keeps every
// partial product a binomial no larger than the result, so clamping early is
// exact.
u128 binomial_sat(std::uint64_t m, unsigned j) {
  if (j > m) return 0;
  std::uint64_t s = std::min<std::uint64_t>(j, m - j);
  u128 c = 1;
  for (std::uint64_t i = 0; i < s; ++i) {
    c = c * (m - i) / (i + 1);
    if (c >= kSaturated) return kSaturated;
  }
  return c;
}

std::uint64_t largest_top_u64(std::uint64_t rem, unsigned j) {
  if (j == 1) return rem;
  double fact = 1;
  for (unsigned i = 2; i <= j; ++i) fact *= i;
  double est = std::pow(fact * static_cast<double>(rem), 1.0 / j) + (j - 1) / 2.0;
  std::uint64_t m = est < j ? j : static_cast<std::uint64_t>(est);
  while (binomial_sat(m + 1, j) <= rem) ++m;
  while (m > j && binomial_sat(m, j) > rem) --m;
  return m;
}

Natural largest_top_big(const Natural& rem, unsigned j) {
  if (j == 1) return rem;
  Natural lo = j;  // C(j, j) = 1 <= rem
  Natural hi = 2 * lo;
  while (binomial(hi, j) <= rem) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    Natural mid = (lo + hi) / 2;
    if (binomial(mid, j) <= rem) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

Natural binomial(const Natural& top, unsigned bottom) {
  if (top < bottom) return 0;
  Natural c = 1;
  for (unsigned i = 0; i < bottom; ++i) {
    c *= top - i;
    c /= i + 1;
  }
  return c;
}

Natural CascadeExpansion::value() const {
  Natural s = 0;
  for (const auto& t : terms) s += binomial(t.top, t.bottom);
  return s;
}

std::string CascadeExpansion::str() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += "C(" + t.top.str() + "," + std::to_string(t.bottom) + ")";
  }
  return out.empty() ? "0" : out;
}

CascadeExpansion cascade_expand(const Natural& n, unsigned k) {
  if (n < 1 || k < 1) throw PreconditionError("cascade_expand needs n >= 1 and k >= 1");
  CascadeExpansion out;
  out.k = k;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    auto rem = n.convert_to<std::uint64_t>();
    for (unsigned j = k; j >= 1 && rem > 0; --j) {
      std::uint64_t top = largest_top_u64(rem, j);
      out.terms.push_back({top, j});
      rem -= static_cast<std::uint64_t>(binomial_sat(top, j));
    }
    return out;
  }
  Natural rem = n;
  for (unsigned j = k; j >= 1 && rem > 0; --j) {
    Natural top = largest_top_big(rem, j);
    rem -= binomial(top, j);
    out.terms.push_back({std::move(top), j});
  }
  return out;
}

Natural kk_shadow_bound(const Natural& n, unsigned k) {
  if (k < 1) throw PreconditionError("kk_shadow_bound needs k >= 1");
  if (n == 0) return 0;
  Natural s = 0;
  for (const auto& t : cascade_expand(n, k).terms) s += binomial(t.top, t.bottom - 1);
  return s;
}

Natural macaulay_shadow_bound(const Natural& n, unsigned k) {
  if (k < 1) throw PreconditionError("macaulay_shadow_bound needs k >= 1");
  if (n == 0) return 0;
  Natural s = 0;
  for (const auto& t : cascade_expand(n, k).terms) s += binomial(t.top - 1, t.bottom - 1);
  return s;
}

Natural shadow_bound(BoundKind kind, const Natural& f_k, unsigned k) {
  return kind == BoundKind::KruskalKatona ? kk_shadow_bound(f_k, k + 1) : macaulay_shadow_bound(f_k, k + 1);
}

InequalityVerdict check_bound(const FVector& f, BoundKind kind) {
  for (int k = 0; k <= f.top_index(); ++k) {
    Natural b = shadow_bound(kind, f.at(k), static_cast<unsigned>(k));
    if (b > f.at(k - 1)) return {BoundViolation{k, b, f.at(k - 1)}};
  }
  return {};
}

bool bv_inequality_holds(std::span<const std::uint64_t> n_list, unsigned k, bool with_one) {
  if (k < 1) throw PreconditionError("bv_inequality_holds needs k >= 1");
  if (n_list.empty()) throw PreconditionError("bv_inequality_holds needs a non-empty list");
  const std::size_t r = n_list.size() - 1;
  if (with_one ? (n_list.size() != k + 1) : (r >= k)) {
    throw PreconditionError("bv_inequality_holds: list length " + std::to_string(n_list.size()) +
                            " does not fit k = " + std::to_string(k));
  }
  // d^j(m) in the notation of the inequality.
  auto d = [](std::uint64_t m, unsigned j) { return macaulay_shadow_bound(m, j + 1); };
  auto next = [&](std::size_t i) -> std::uint64_t { return i + 1 < n_list.size() ? n_list[i + 1] : 0; };

  Natural total = 0;
  for (auto v : n_list) total += v;
  Natural lhs, rhs;
  if (!with_one) {
    lhs = macaulay_shadow_bound(total, k + 1);
    for (std::size_t i = 0; i <= r; ++i) {
      rhs += std::max<Natural>(next(i), d(n_list[i], k - static_cast<unsigned>(i)));
    }
  } else {
    lhs = macaulay_shadow_bound(total + 1, k + 1);
    rhs = 1;
    for (std::size_t i = 0; i < k; ++i) {
      rhs += std::max<Natural>(next(i), d(n_list[i], k - static_cast<unsigned>(i)));
    }
  }
  return lhs <= rhs;
}

}  // namespace mslat
