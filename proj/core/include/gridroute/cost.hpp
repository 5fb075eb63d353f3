#pragma once

#include <cassert>
#include <cstdint>
#include <limits>

namespace gridroute {

// Costs and distances are exact 64-bit integers.  kInfCost marks absent edges
// (outside the routing area) and unreachable distances; all arithmetic below
// saturates at kInfCost instead of wrapping.
using Cost = std::int64_t;
using Coord = std::int64_t;

inline constexpr Cost kInfCost = std::numeric_limits<Cost>::max();

// The grid lives on a bounded universe so that the outermost tiles, which are
// conceptually unbounded, become finite rectangles.  Instance data is kept
// strictly inside the universe; the two bounds act as the +/- infinity
// coordinates of the tile grid.
inline constexpr Coord kUniverseLo = -(Coord{1} << 31);
inline constexpr Coord kUniverseHi = Coord{1} << 31;
inline constexpr Coord kCoordLimit = (Coord{1} << 31) - 1;

// Finite edge costs are capped so that every affine evaluation and every
// rational cross-product predicate stays inside __int128.
inline constexpr Cost kMaxFiniteCost = Cost{1} << 29;

constexpr bool is_finite(Cost c) { return c != kInfCost; }

// a + b, saturating at infinity.  Both operands must be >= 0.
constexpr Cost cost_add(Cost a, Cost b) {
  assert(a >= 0 && b >= 0);
  if (a == kInfCost || b == kInfCost) return kInfCost;
  if (a > kInfCost - b) return kInfCost;
  return a + b;
}

constexpr Cost cost_add(Cost a, Cost b, Cost c) { return cost_add(cost_add(a, b), c); }
constexpr Cost cost_add(Cost a, Cost b, Cost c, Cost d) {
  return cost_add(cost_add(a, b), cost_add(c, d));
}

// c * len for a nonnegative run length.  A run of length zero costs nothing
// even on infinite-cost tiles; this is what lets labels cross the zero-width
// tiles produced by duplicated grid coordinates.
constexpr Cost cost_mul(Cost c, std::int64_t len) {
  assert(c >= 0 && len >= 0);
  if (len == 0) return 0;
  if (c == kInfCost) return kInfCost;
  if (c != 0 && len > kInfCost / c) return kInfCost;
  return c * len;
}

constexpr Cost cost_min(Cost a, Cost b) { return a < b ? a : b; }

}  // namespace gridroute
