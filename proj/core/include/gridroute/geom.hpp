#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>

#include "gridroute/cost.hpp"

namespace gridroute {

// Grid vertex (x, y, z); layers are numbered 1..l.
struct Point3 {
  Coord x = 0;
  Coord y = 0;
  int z = 1;

  friend auto operator<=>(const Point3&, const Point3&) = default;
};

// Unit edge between two adjacent grid vertices, stored with a <= b so the
// same physical edge always compares equal.
struct Edge {
  Point3 a;
  Point3 b;

  Edge() = default;
  Edge(Point3 u, Point3 v) {
    if (v < u) std::swap(u, v);
    a = u;
    b = v;
  }

  bool horizontal() const { return a.y == b.y && a.z == b.z; }
  bool vertical() const { return a.x == b.x && a.z == b.z; }
  bool via() const { return a.x == b.x && a.y == b.y; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Axis-aligned rectangle on a single layer; may be degenerate to a line or a
// point (x_lo == x_hi and/or y_lo == y_hi).
struct Rect {
  Coord x_lo = 0, x_hi = 0;
  Coord y_lo = 0, y_hi = 0;
  int z = 1;

  bool valid() const { return x_lo <= x_hi && y_lo <= y_hi; }
  bool contains(Point3 p) const {
    return p.z == z && x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
  bool contains_xy(Coord x, Coord y) const {
    return x_lo <= x && x <= x_hi && y_lo <= y && y <= y_hi;
  }
  // Nearest point of the rectangle to p in the same layer plane.
  Point3 clamp_xy(Point3 p) const {
    return {std::clamp(p.x, x_lo, x_hi), std::clamp(p.y, y_lo, y_hi), z};
  }

  friend auto operator<=>(const Rect&, const Rect&) = default;
};

inline std::int64_t gap(Coord v, Coord lo, Coord hi) {
  if (v < lo) return lo - v;
  if (v > hi) return v - hi;
  return 0;
}

}  // namespace gridroute
