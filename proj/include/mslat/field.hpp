#pragma once

#include <cstdint>

namespace mslat {

/// GF(2^64) as GF(2)[x] / (x^64 + x^4 + x^3 + x + 1). Elements are the
/// coefficient bit patterns.
struct GF2_64 {
  using value_type = std::uint64_t;
  static constexpr value_type zero() { return 0; }
  static constexpr value_type one() { return 1; }
  static value_type from_random(std::uint64_t bits) { return bits; }
  static value_type add(value_type a, value_type b) { return a ^ b; }
  static value_type sub(value_type a, value_type b) { return a ^ b; }
  static value_type mul(value_type a, value_type b);
  static value_type inv(value_type a);
};

/// The prime field of order 2^61 - 1.
struct Fp61 {
  using value_type = std::uint64_t;
  static constexpr std::uint64_t modulus = (std::uint64_t(1) << 61) - 1;
  static constexpr value_type zero() { return 0; }
  static constexpr value_type one() { return 1; }
  static value_type from_random(std::uint64_t bits) { return reduce(bits >> 3); }
  static value_type add(value_type a, value_type b) { return reduce(a + b); }
  static value_type sub(value_type a, value_type b) { return reduce(a + modulus - b); }
  static value_type mul(value_type a, value_type b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return reduce(reduce(static_cast<std::uint64_t>(p & modulus)) + static_cast<std::uint64_t>(p >> 61));
  }
  static value_type inv(value_type a);

 private:
  static value_type reduce(std::uint64_t v) {
    v = (v & modulus) + (v >> 61);
    return v >= modulus ? v - modulus : v;
  }
};

}  // namespace mslat
