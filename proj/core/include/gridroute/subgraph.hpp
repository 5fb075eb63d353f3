#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "gridroute/geom.hpp"

namespace gridroute {

// Finite box of grid vertices: x in [x_lo, x_hi], y in [y_lo, y_hi],
// z in [1, layers].
struct Window {
  Coord x_lo = 0, x_hi = -1;
  Coord y_lo = 0, y_hi = -1;
  int layers = 1;

  std::int64_t width() const { return x_hi - x_lo + 1; }
  std::int64_t height() const { return y_hi - y_lo + 1; }
  std::int64_t vertex_count() const {
    return width() * height() * layers;
  }
  bool valid() const { return x_lo <= x_hi && y_lo <= y_hi && layers >= 1; }
  bool contains(Point3 p) const {
    return p.z >= 1 && p.z <= layers && x_lo <= p.x && p.x <= x_hi &&
           y_lo <= p.y && p.y <= y_hi;
  }
  std::int64_t index(Point3 p) const {
    return (static_cast<std::int64_t>(p.z - 1) * height() + (p.y - y_lo)) * width() +
           (p.x - x_lo);
  }
  Point3 point(std::int64_t idx) const {
    const Coord x = x_lo + idx % width();
    idx /= width();
    const Coord y = y_lo + idx % height();
    return {x, y, static_cast<int>(idx / height()) + 1};
  }
  Window grown(Coord margin) const {
    return {x_lo - margin, x_hi + margin, y_lo - margin, y_hi + margin, layers};
  }

  friend bool operator==(const Window&, const Window&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(e.a.x));
    mix(static_cast<std::uint64_t>(e.a.y));
    mix(static_cast<std::uint64_t>(e.a.z));
    mix(static_cast<std::uint64_t>(e.b.x));
    mix(static_cast<std::uint64_t>(e.b.y));
    mix(static_cast<std::uint64_t>(e.b.z));
    return static_cast<std::size_t>(h);
  }
};

// Routing subgraph: the window's grid graph minus blocked vertices and minus
// individually removed edges (used for other nets' reservations).
class Subgraph {
 public:
  Subgraph() = default;
  explicit Subgraph(Window w)
      : win_(w), blocked_(static_cast<std::size_t>(w.vertex_count()), 0) {}

  const Window& window() const { return win_; }

  void block_vertex(Point3 p) {
    if (win_.contains(p)) blocked_[static_cast<std::size_t>(win_.index(p))] = 1;
  }
  void block_rect(const Rect& r) {
    for (Coord y = r.y_lo; y <= r.y_hi; ++y)
      for (Coord x = r.x_lo; x <= r.x_hi; ++x) block_vertex({x, y, r.z});
  }
  void block_edge(const Edge& e) { blocked_edges_.insert(e); }

  bool has_vertex(Point3 p) const {
    return win_.contains(p) && !blocked_[static_cast<std::size_t>(win_.index(p))];
  }
  bool has_edge(const Edge& e) const {
    return has_vertex(e.a) && has_vertex(e.b) && !blocked_edges_.count(e);
  }
  bool edges_blocked() const { return !blocked_edges_.empty(); }

 private:
  Window win_;
  std::vector<std::uint8_t> blocked_;
  std::unordered_set<Edge, EdgeHash> blocked_edges_;
};

}  // namespace gridroute
