#pragma once

#include <cassert>
#include <cstdint>

namespace gridroute {

using i128 = __int128;
using u128 = unsigned __int128;

// ---- 256-bit helpers -------------------------------------------------------
//
// All envelope geometry is decided by signs of integer expressions.  Most fit
// comfortably in __int128; products of two derived 128-bit quantities do not,
// so comparisons escalate to an exact 256-bit path.  No floating point, no
// epsilons.

struct U256 {
  u128 hi = 0, lo = 0;
};

inline U256 umul256(u128 a, u128 b) {
  const u128 a1 = a >> 64, a0 = u128(static_cast<std::uint64_t>(a));
  const u128 b1 = b >> 64, b0 = u128(static_cast<std::uint64_t>(b));
  const u128 p00 = a0 * b0;
  const u128 p01 = a0 * b1;
  const u128 p10 = a1 * b0;
  const u128 p11 = a1 * b1;
  const u128 mid = p01 + p10;  // overflow carries weight 2^192
  U256 r;
  r.lo = p00 + (mid << 64);
  r.hi = p11 + (mid >> 64) + (mid < p01 ? u128{1} << 64 : 0) + (r.lo < p00 ? 1 : 0);
  return r;
}

inline int ucmp256(U256 a, U256 b) {
  if (a.hi != b.hi) return a.hi < b.hi ? -1 : 1;
  if (a.lo != b.lo) return a.lo < b.lo ? -1 : 1;
  return 0;
}

inline U256 uadd256(U256 a, U256 b) {
  U256 r{a.hi + b.hi, a.lo + b.lo};
  if (r.lo < a.lo) ++r.hi;
  return r;
}

inline U256 usub256(U256 a, U256 b) {  // requires a >= b
  U256 r{a.hi - b.hi, a.lo - b.lo};
  if (a.lo < b.lo) --r.hi;
  return r;
}

// Signed 256-bit value as sign + magnitude; zero has neg == false.
struct I256 {
  bool neg = false;
  U256 mag;
};

inline I256 imul256(i128 a, i128 b) {
  I256 r;
  r.neg = (a < 0) != (b < 0);
  const u128 ua = a < 0 ? u128(-(a + 1)) + 1 : u128(a);
  const u128 ub = b < 0 ? u128(-(b + 1)) + 1 : u128(b);
  r.mag = umul256(ua, ub);
  if (r.mag.hi == 0 && r.mag.lo == 0) r.neg = false;
  return r;
}

inline I256 iadd256(I256 a, I256 b) {
  if (a.neg == b.neg) return {a.neg, uadd256(a.mag, b.mag)};
  const int c = ucmp256(a.mag, b.mag);
  if (c == 0) return {};
  return c > 0 ? I256{a.neg, usub256(a.mag, b.mag)} : I256{b.neg, usub256(b.mag, a.mag)};
}

inline int icmp256(I256 a, I256 b) {
  if (a.neg != b.neg) return a.neg ? -1 : 1;
  const int c = ucmp256(a.mag, b.mag);
  return a.neg ? -c : c;
}

inline int isign256(I256 a) {
  if (a.mag.hi == 0 && a.mag.lo == 0) return 0;
  return a.neg ? -1 : 1;
}

// Exact sign of a*b + c*d for arbitrary 128-bit operands.
inline int sign_ab_plus_cd(i128 a, i128 b, i128 c, i128 d) {
  return isign256(iadd256(imul256(a, b), imul256(c, d)));
}

// Compare a*b with c*d exactly.
inline int cmp_ab_cd(i128 a, i128 b, i128 c, i128 d) {
  return isign256(iadd256(imul256(a, b), imul256(-c, d)));
}

// ---- exact rationals -------------------------------------------------------

// Unreduced rational with positive denominator.  Values produced by the
// envelope structures keep |num|, |den| well below 2^127; comparisons are
// exact for the full range via the 256-bit path.
struct Rat {
  i128 num = 0;
  i128 den = 1;

  static Rat of(std::int64_t v) { return {v, 1}; }
  static Rat make(i128 n, i128 d) {
    assert(d != 0);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return {n, d};
  }
  bool is_int() const { return num % den == 0; }
  std::int64_t floor_int() const {
    i128 q = num / den;
    if (num % den != 0 && num < 0) --q;
    return static_cast<std::int64_t>(q);
  }
};

inline int rat_cmp(const Rat& a, const Rat& b) {
  return cmp_ab_cd(a.num, b.den, b.num, a.den);
}
inline int rat_cmp(const Rat& a, std::int64_t v) {
  return cmp_ab_cd(a.num, 1, i128(v), a.den);
}
inline bool rat_eq(const Rat& a, const Rat& b) { return rat_cmp(a, b) == 0; }
inline bool rat_lt(const Rat& a, const Rat& b) { return rat_cmp(a, b) < 0; }
inline bool rat_le(const Rat& a, const Rat& b) { return rat_cmp(a, b) <= 0; }
inline Rat rat_min(const Rat& a, const Rat& b) { return rat_cmp(a, b) <= 0 ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return rat_cmp(a, b) >= 0 ? a : b; }

}  // namespace gridroute
