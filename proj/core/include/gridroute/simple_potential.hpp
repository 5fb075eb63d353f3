#pragma once

#include <vector>

#include "gridroute/envelope.hpp"
#include "gridroute/model.hpp"

namespace gridroute {

// Cumulative via costs; the cost of a monotone via stack between two layers
// is a prefix-sum difference.
class ViaPrefix {
 public:
  ViaPrefix() = default;
  explicit ViaPrefix(const SimpleCosts& sc);

  int layers() const { return static_cast<int>(cum_.size()); }
  Cost between(int z1, int z2) const {
    const Cost a = cum_[z1 - 1], b = cum_[z2 - 1];
    return a < b ? b - a : a - b;
  }

 private:
  std::vector<Cost> cum_;  // cum_[z-1]: via cost from layer 1 up to layer z
};

// Exact distance between two vertices of the unbounded grid under a uniform
// per-layer cost model.  The quadratic form scans every (wire layer, order)
// combination; the linear form folds the scan into prefix minima.  They are
// equal everywhere; the quadratic one exists to check the linear one.
Cost simple_distance_quadratic(const SimpleCosts& sc, const ViaPrefix& vp, Point3 a, Point3 b);
Cost simple_distance_linear(const SimpleCosts& sc, const ViaPrefix& vp, Point3 a, Point3 b);

// Exact distance from v to the nearest vertex of a rectangle: clamping to
// the rectangle is optimal because each coordinate's cost is monotone in the
// distance travelled.
Cost simple_rect_distance(const SimpleCosts& sc, const ViaPrefix& vp, Point3 v, const Rect& r);

// Exact distance to the nearest target rectangle, linear scan.
Cost simple_target_distance(const SimpleCosts& sc, const ViaPrefix& vp, Point3 v,
                            const TargetSet& targets);

// Coordinatewise lower bound: cheapest horizontal layer for the x gap,
// cheapest vertical layer for the y gap, via stack for the layer gap.
Cost l1_potential(const SimpleCosts& sc, const ViaPrefix& vp, Point3 v, const TargetSet& targets);

// Distance structure for the uniform model: the plane is cut at every target
// rectangle coordinate, each (tile, layer) keeps the lower envelope of the
// affine candidate functions induced by the nine relative positions a target
// can have (inside, four sides, four quadrants), and a query is one point
// location.  Exactly equal to simple_target_distance everywhere.
class SimpleOracle {
 public:
  SimpleOracle(const SimpleCosts& sc, const TargetSet& targets);

  Cost query(Point3 v) const;

  int cols() const { return static_cast<int>(xe_.size()) - 1; }
  int rows() const { return static_cast<int>(ye_.size()) - 1; }
  const EnvelopeIndex& envelope(int i, int j, int z) const {
    return env_[(static_cast<std::size_t>(i) * rows() + j) * l_ + (z - 1)];
  }

 private:
  int col_of(Coord x) const;
  int row_of(Coord y) const;

  int l_ = 0;
  std::vector<Coord> xe_, ye_;  // tile edges, universe sentinels included
  std::vector<EnvelopeIndex> env_;
};

}  // namespace gridroute
