#pragma once

#include <utility>
#include <vector>

#include "gridroute/cost.hpp"
#include "gridroute/geom.hpp"

namespace gridroute {

// Uniform per-layer cost model: one horizontal and one vertical cost per
// layer, one via cost per consecutive layer pair.  All costs are positive
// and finite.
struct SimpleCosts {
  std::vector<Cost> horiz;  // horiz[z-1], z = 1..l
  std::vector<Cost> vert;   // vert[z-1]
  std::vector<Cost> via;    // via[z-1] between layers z and z+1, z = 1..l-1

  int layers() const { return static_cast<int>(horiz.size()); }
  bool valid() const;
};

// Rectilinear tile grid: interior cuts xs (x^1 <= ... <= x^p) and ys, plus
// the number of layers.  Column i (0..p) spans [x^i, x^{i+1}] with the
// implicit sentinels x^0 = kUniverseLo and x^{p+1} = kUniverseHi; rows are
// analogous.  A coordinate may appear twice, producing a zero-width column
// or zero-height row (used for point/line targets and single-track
// reservations); three equal coordinates are not allowed.
class TileGrid {
 public:
  TileGrid() = default;
  TileGrid(std::vector<Coord> xs, std::vector<Coord> ys, int layers);

  int layers() const { return layers_; }
  int x_cuts() const { return static_cast<int>(xs_.size()); }   // p
  int y_cuts() const { return static_cast<int>(ys_.size()); }   // q
  int cols() const { return x_cuts() + 1; }                     // columns 0..p
  int rows() const { return y_cuts() + 1; }

  const std::vector<Coord>& xs() const { return xs_; }
  const std::vector<Coord>& ys() const { return ys_; }

  // Boundary coordinates of column i / row j, sentinels included.
  Coord x_lo(int i) const { return i == 0 ? kUniverseLo : xs_[i - 1]; }
  Coord x_hi(int i) const { return i == x_cuts() ? kUniverseHi : xs_[i]; }
  Coord y_lo(int j) const { return j == 0 ? kUniverseLo : ys_[j - 1]; }
  Coord y_hi(int j) const { return j == y_cuts() ? kUniverseHi : ys_[j]; }

  // Inclusive range of columns whose closed span contains the point x, or
  // contains the span [lo, hi].  Point containment can yield up to three
  // columns when x is a duplicated cut.
  std::pair<int, int> cols_at(Coord x) const;
  std::pair<int, int> rows_at(Coord y) const;
  std::pair<int, int> cols_spanning(Coord lo, Coord hi) const;
  std::pair<int, int> rows_spanning(Coord lo, Coord hi) const;

  bool valid() const;

  friend bool operator==(const TileGrid&, const TileGrid&) = default;

 private:
  std::vector<Coord> xs_, ys_;
  int layers_ = 0;
};

// Per-tile cost model over a TileGrid.  horiz/vert are indexed by
// (column i, row j, layer z); via by (i, j, z) for the pair (z, z+1).
// kInfCost marks tiles outside the routing area.
class GeneralCosts {
 public:
  GeneralCosts() = default;
  GeneralCosts(TileGrid grid, Cost fill);
  static GeneralCosts from_simple(const SimpleCosts& sc);

  const TileGrid& grid() const { return grid_; }

  Cost h(int i, int j, int z) const { return horiz_[idx(i, j, z)]; }
  Cost v(int i, int j, int z) const { return vert_[idx(i, j, z)]; }
  Cost via(int i, int j, int z) const { return via_[idx(i, j, z)]; }
  Cost& h(int i, int j, int z) { return horiz_[idx(i, j, z)]; }
  Cost& v(int i, int j, int z) { return vert_[idx(i, j, z)]; }
  Cost& via(int i, int j, int z) { return via_[idx(i, j, z)]; }

  // Mirror image across the main diagonal: swaps x/y, horizontal/vertical.
  // Running an x-axis algorithm on the transpose yields the y-axis variant.
  GeneralCosts transposed() const;

  // Number of distinct finite horizontal/vertical cost values.
  int distinct_plane_costs() const;

  bool valid() const;

  friend bool operator==(const GeneralCosts&, const GeneralCosts&) = default;

 private:
  std::size_t idx(int i, int j, int z) const {
    return (static_cast<std::size_t>(i) * grid_.rows() + j) * grid_.layers() + (z - 1);
  }

  TileGrid grid_;
  std::vector<Cost> horiz_, vert_, via_;
};

// Target set: union of rectangles (each on one layer).
struct TargetSet {
  std::vector<Rect> rects;

  bool empty() const { return rects.empty(); }
  bool contains(Point3 p) const {
    for (const Rect& r : rects)
      if (r.contains(p)) return true;
    return false;
  }
};

// Mirror image of a target set across the main diagonal (matches
// GeneralCosts::transposed).
inline TargetSet transposed(const TargetSet& t) {
  TargetSet out;
  out.rects.reserve(t.rects.size());
  for (const Rect& r : t.rects) out.rects.push_back({r.y_lo, r.y_hi, r.x_lo, r.x_hi, r.z});
  return out;
}

// Cost of a unit edge: the minimum over all tiles containing it.  Edges on a
// shared boundary take the cheaper side; edges not contained in any finite
// tile cost kInfCost.
Cost edge_cost(const GeneralCosts& gc, const Edge& e);

// True iff every target rectangle fits the grid: non-degenerate extents are
// unions of column/row spans and degenerate extents have a zero-width span
// (duplicated coordinate) at their coordinate.  This is the precondition
// under which the distance structures are exact everywhere.
bool is_consistent(const TileGrid& grid, const TargetSet& targets);

// Refines the grid so that the targets become consistent, duplicating the
// coordinate of a degenerate extent.  New tiles inherit the costs of the tile
// they split, so every edge cost (and the set of distinct costs) is
// preserved.  Adds at most two x and two y coordinates per rectangle;
// idempotent once the targets are consistent.
GeneralCosts refine_grid(const GeneralCosts& gc, const TargetSet& targets);

// Weakest form of target/grid agreement: every boundary coordinate of every
// rect is a grid coordinate.  Sufficient for the segment labeling to run;
// exactness at isolated degenerate targets additionally needs the duplicated
// coordinates that refine_grid inserts.
bool boundary_coords_on_grid(const TileGrid& grid, const TargetSet& targets);

}  // namespace gridroute
