#include "mslat/field.hpp"

#include "mslat/error.hpp"

namespace mslat {

namespace {

using u128 = unsigned __int128;

// Carry-less 64x64 -> 128 product, four bits of b at a time.
u128 clmul(std::uint64_t a, std::uint64_t b) {
  u128 table[16];
  table[0] = 0;
  table[1] = a;
  for (int i = 2; i < 16; i += 2) {
    table[i] = table[i / 2] << 1;
    table[i + 1] = table[i] ^ a;
  }
  u128 r = 0;
  for (int shift = 60; shift >= 0; shift -= 4) {
    r = (r << 4) ^ table[(b >> shift) & 0xF];
  }
  return r;
}

constexpr std::uint64_t kTail = 0x1B;  // x^4 + x^3 + x + 1

}  // namespace

GF2_64::value_type GF2_64::mul(value_type a, value_type b) {
  u128 p = clmul(a, b);
  auto hi = static_cast<std::uint64_t>(p >> 64);
  auto lo = static_cast<std::uint64_t>(p);
  u128 fold = clmul(hi, kTail);
  lo ^= static_cast<std::uint64_t>(fold);
  auto hi2 = static_cast<std::uint64_t>(fold >> 64);
  lo ^= static_cast<std::uint64_t>(clmul(hi2, kTail));
  return lo;
}

GF2_64::value_type GF2_64::inv(value_type a) {
  if (a == 0) throw InvariantError("inverse of zero in GF(2^64)");
  // a^(2^64 - 2) = product of a^(2^i) for i = 1..63.
  value_type sq = a, r = 1;
  for (int i = 1; i < 64; ++i) {
    sq = mul(sq, sq);
    r = mul(r, sq);
  }
  return r;
}

Fp61::value_type Fp61::inv(value_type a) {
  if (a == 0) throw InvariantError("inverse of zero modulo 2^61 - 1");
  value_type r = 1, b = a;
  for (std::uint64_t e = modulus - 2; e; e >>= 1) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
  }
  return r;
}

}  // namespace mslat
